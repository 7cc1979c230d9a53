#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(coeffs) = bch3::parse::coefficients(s) {
        assert!(!coeffs.is_empty());
        assert!(coeffs.iter().all(|&c| c < 3));
        let joined = coeffs.iter().map(u8::to_string).collect::<Vec<_>>().join(",");
        assert_eq!(bch3::parse::coefficients(&joined).unwrap(), coeffs);
    }
    if let Ok(p) = bch3::parse::modulus(s) {
        assert!(p.degree().unwrap_or(0) >= 1);
    }
});
