#![no_main]

use libfuzzer_sys::fuzz_target;
use seaweed_core::Composition;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = s.parse::<Composition>() {
        assert_eq!(c.to_string().parse::<Composition>().unwrap(), c);
        assert!(c.parts().iter().all(|&p| p > 0));
    }
});
