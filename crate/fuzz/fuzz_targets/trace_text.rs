#![no_main]

use libfuzzer_sys::fuzz_target;
use seaweed_core::winding::parse_trace_text;
use seaweed_core::{index_dk, SeaweedType, WindingTrace};

// First line is the start type, the rest is the trace.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let (head, body) = s.split_once('\n').unwrap_or((s, ""));
    let Ok(steps) = parse_trace_text(body) else { return };
    let Ok(start) = head.parse::<SeaweedType>() else { return };
    if let Ok(trace) = WindingTrace::replay(start.clone(), steps) {
        assert_eq!(parse_trace_text(&trace.to_text()).unwrap(), trace.steps());
        if start.n() <= 256 {
            assert_eq!(trace.index(), index_dk(&start).unwrap());
        }
    }
});
