#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = bch3::parse::residues(s) {
        let joined = r.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        assert_eq!(bch3::parse::residues(&joined).unwrap(), r);
    }
});
