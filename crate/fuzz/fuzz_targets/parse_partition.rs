#![no_main]

use libfuzzer_sys::fuzz_target;
use seaweed_core::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(lambda) = s.parse::<Partition>() {
        // Both printed forms parse back to the same partition.
        assert_eq!(lambda.to_string().parse::<Partition>().unwrap(), lambda);
        assert_eq!(lambda.to_frequency_string().parse::<Partition>().unwrap(), lambda);
        let total: u64 = lambda.parts().iter().map(|&p| u64::from(p)).sum();
        assert_eq!(total, u64::from(lambda.weight()));
    }
});
