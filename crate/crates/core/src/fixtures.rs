//! Source text of the reference architectures used in tests and docs.

/// Three-stage producer/filter/consumer pipeline.
pub const PIPELINE: &str = "architecture Pipeline {
  component Producer { port p : out; complexity 4; }
  component Filter   { port i : in; port o : out; complexity 7; }
  component Consumer { port c : in; complexity 2; }
  attach Producer.p -> Filter.i;
  attach Filter.o -> Consumer.c;
}
";
