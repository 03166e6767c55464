#![no_main]

use adg_metrics::{parse, parse_str, pretty_print, render_json, to_dot, Analysis, RenderOptions};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(arch) = parse(data) else {
        return;
    };
    let text = pretty_print(&arch);
    let back = parse_str(&text).expect("canonical text parses");
    assert_eq!(back, arch);
    assert_eq!(pretty_print(&back), text);

    // analysis and rendering are total over valid models
    let a = Analysis::run(&arch, true);
    assert!(a.report.m_s <= a.report.m_s_star);
    let _ = render_json(&a.report, &a.adg, &RenderOptions { show_closure: true });
    let _ = to_dot(&a.adg);
});
