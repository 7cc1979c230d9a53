#![no_main]
use bch3::field::Field;
use bch3::polyring::Poly3;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // at most degree 8 keeps table construction cheap
    let coeffs: Vec<u8> = data.iter().take(9).map(|b| b % 3).collect();
    let Ok(f) = Field::with_modulus(Poly3::from_coeffs(coeffs)) else { return };
    assert_eq!(f.order(f.alpha()).unwrap(), f.group_order());
    let mut counts = [0u32; 3];
    for x in f.elements() {
        counts[f.trace(x) as usize] += 1;
    }
    assert_eq!(counts, [f.size() / 3; 3]);
});
