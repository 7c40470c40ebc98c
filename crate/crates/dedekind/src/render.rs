//! Canonical string forms: integers as decimal, rationals as
//! "numerator/denominator" in lowest terms with positive denominator.

use num_rational::BigRational;

pub fn rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
