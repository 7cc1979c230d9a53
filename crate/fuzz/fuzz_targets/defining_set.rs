#![no_main]
use bch3::codes::code_from_defining_set;
use bch3::field::Field;
use bch3::polyring::Poly3;
use bch3::Error;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&m, rest)) = data.split_first() else { return };
    let m = 1 + u32::from(m % 4);
    let field = Field::new(m).unwrap();
    let z: Vec<i64> = rest.iter().map(|&b| i64::from(b as i8)).collect();
    match code_from_defining_set(&field, &z) {
        Ok(code) => {
            let n = code.n as usize;
            assert_eq!(&code.generator * &code.parity_check, Poly3::x_pow_minus_one(n));
            assert_eq!(code.dimension as usize, n - code.defining_set.len());
        }
        Err(Error::Usage(_)) => {}
        Err(e) => panic!("unexpected error {e}"),
    }
});
