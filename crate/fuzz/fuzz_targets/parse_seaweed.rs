#![no_main]

use libfuzzer_sys::fuzz_target;
use seaweed_core::{index_dk, index_via_winding, SeaweedType};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(t) = s.parse::<SeaweedType>() else { return };
    assert_eq!(t.to_string().parse::<SeaweedType>().unwrap(), t);
    // Keep the meander small enough for quick iterations.
    if t.is_empty() || t.n() > 256 {
        return;
    }
    assert_eq!(index_dk(&t).unwrap(), index_via_winding(&t).unwrap(), "{t}");
});
