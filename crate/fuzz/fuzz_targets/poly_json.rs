#![no_main]
use bch3::polyring::Poly3;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(p) = serde_json::from_slice::<Poly3>(data) {
        assert!(p.coeffs().iter().all(|&c| c < 3));
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<Poly3>(&text).unwrap(), p);
    }
});
