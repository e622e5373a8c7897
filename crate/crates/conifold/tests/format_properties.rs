use conifold::formats::{parse_rational, rational_to_string};
use conifold_core::Rational;
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #[test]
    fn rational_strings_round_trip(num in any::<i64>(), den in 1i64..=i64::MAX, scale in 0u32..40) {
        let big_num = BigInt::from(num) * BigInt::from(10).pow(scale);
        let r = Rational::new(big_num, BigInt::from(den));
        let s = rational_to_string(&r);
        prop_assert_eq!(parse_rational(&s).unwrap(), r.clone());
        prop_assert_eq!(s.contains('/'), !r.is_integer());
    }
}
