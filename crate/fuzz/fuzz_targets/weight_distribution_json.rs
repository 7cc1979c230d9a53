#![no_main]
use bch3::codes::WeightDistribution;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(wd) = WeightDistribution::from_json(s) {
        let text = wd.to_json();
        let again = WeightDistribution::from_json(&text).expect("own output parses");
        assert_eq!(again, wd);
        assert_eq!(again.to_json(), text);
        assert!(wd.iter().all(|(_, c)| c > 0));
    }
});
