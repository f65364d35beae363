//! Characters, dimension formulas and the trace of `T_2`.

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{frac, rat, Rational};
use crate::quaternion::{is_prime, norm_rotations};

/// Trace `1 + 2cos θ` of a rotation; determines its character values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterInput {
    trace: Rational,
}

impl CharacterInput {
    pub fn new(trace: Rational) -> Result<Self> {
        if trace < rat(-1) || trace > rat(3) {
            return Err(Error::BadParameter(format!("rotation trace {trace} outside [-1, 3]")));
        }
        Ok(CharacterInput { trace })
    }

    pub fn trace(&self) -> &Rational {
        &self.trace
    }
}

/// `Θ_l = 1 + Σ_{k=1}^{l} t_k` with `t_0 = 2`, `t_1 = trace − 1`,
/// `t_k = t_1 t_{k−1} − t_{k−2}` (so `t_k = 2cos kθ`).
pub fn theta_character(l: u32, c: &CharacterInput) -> Rational {
    theta_from_trace(l, &c.trace)
}

pub(crate) fn theta_from_trace(l: u32, trace: &Rational) -> Rational {
    let t1 = trace - Rational::one();
    let mut prev = rat(2);
    let mut cur = t1.clone();
    let mut sum = Rational::one();
    for _ in 1..=l {
        sum += &cur;
        let next = &t1 * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    sum
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub gamma: u64,
    pub plus: u64,
    pub minus: u64,
}

fn chi3(l: u32) -> i64 {
    match l % 3 {
        0 => 1,
        1 => 0,
        _ => -1,
    }
}

fn to_count(x: Rational) -> u64 {
    assert!(x.is_integer(), "dimension {x} not integral");
    x.to_integer().to_u64().expect("non-negative dimension")
}

/// Closed forms: `dim = (2l+1)/12 + (−1)^l/4 + (2/3)χ(l)` and
/// `dim_± = (2l+1)/24 + (−1)^l/8 + χ(l)/3 ± (1/2)[l ≡ 0, 3 mod 4]`,
/// with `χ(l) = 1, 0, −1` for `l ≡ 0, 1, 2 mod 3`.
pub fn dim_formula(l: u32) -> Dims {
    let sign = if l.is_multiple_of(2) { 1 } else { -1 };
    let base = frac(2 * l as i64 + 1, 12) + frac(sign, 4) + frac(2 * chi3(l), 3);
    let half = frac(2 * l as i64 + 1, 24) + frac(sign, 8) + frac(chi3(l), 3);
    let split = if matches!(l % 4, 0 | 3) { frac(1, 2) } else { Rational::zero() };
    Dims {
        gamma: to_count(base),
        plus: to_count(&half + &split),
        minus: to_count(half - split),
    }
}

/// `(1/12)Θ_l(1) + (1/4)Θ_l(γ_π) + (2/3)Θ_l(γ_{2π/3})`, one term per
/// conjugacy class of Γ weighted by its size.
pub fn dim_via_trace_formula(l: u32) -> u64 {
    let v = frac(1, 12) * theta_from_trace(l, &rat(3))
        + frac(1, 4) * theta_from_trace(l, &rat(-1))
        + frac(2, 3) * theta_from_trace(l, &rat(0));
    to_count(v)
}

/// `(1/2)Θ_l(γ_{π/2}) + (1/2)Θ_l(γ_π)`.
pub fn trace_t2_formula(l: u32) -> i64 {
    let v = frac(1, 2) * theta_from_trace(l, &rat(1)) + frac(1, 2) * theta_from_trace(l, &rat(-1));
    assert!(v.is_integer());
    v.to_integer().to_i64().expect("small trace")
}

/// `Tr(T_p) = (1/12) Σ_{γ ∈ 𝔗_p} Θ_l(γ)` over all rotations of norm `p`.
pub fn trace_t_p_formula(p: u64, l: u32) -> Result<Rational> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let total: Rational = norm_rotations(p)
        .iter()
        .map(|g| theta_from_trace(l, &g.trace()))
        .sum();
    Ok(total / rat(12))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Series {
    GammaEven,
    GammaOdd,
    Plus,
    Minus,
}

/// Number of `(a, b) ≥ 0` with `a·u + b·v = n`.
fn representations(n: i64, u: i64, v: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    (0..=n / u).filter(|a| (n - a * u) % v == 0).count() as u64
}

/// Coefficient of `t^l` in
/// `(1+t⁶)/((1−t⁴)(1−t⁶))`, `t³(1+t⁶)/((1−t⁴)(1−t⁶))`,
/// `1/((1−t³)(1−t⁴))` or `t⁶/((1−t³)(1−t⁴))`.
pub fn generating_series_coeff(series: Series, l: u32) -> u64 {
    let l = l as i64;
    match series {
        Series::GammaEven => representations(l, 4, 6) + representations(l - 6, 4, 6),
        Series::GammaOdd => representations(l - 3, 4, 6) + representations(l - 9, 4, 6),
        Series::Plus => representations(l, 3, 4),
        Series::Minus => representations(l - 6, 3, 4),
    }
}

/// Dimensions read off the generating series.
pub fn dims_from_series(l: u32) -> Dims {
    let gamma = if l.is_multiple_of(2) {
        generating_series_coeff(Series::GammaEven, l)
    } else {
        generating_series_coeff(Series::GammaOdd, l)
    };
    Dims {
        gamma,
        plus: generating_series_coeff(Series::Plus, l),
        minus: generating_series_coeff(Series::Minus, l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GAMMA: [u64; 13] = [1, 0, 0, 1, 1, 0, 2, 1, 1, 2, 2, 1, 3];
    const PLUS: [u64; 13] = [1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 2];
    const MINUS: [u64; 13] = [0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1];

    #[test]
    fn table_up_to_twelve() {
        for l in 0..=12u32 {
            let d = dim_formula(l);
            let i = l as usize;
            assert_eq!((d.gamma, d.plus, d.minus), (GAMMA[i], PLUS[i], MINUS[i]), "l={l}");
        }
    }

    #[test]
    fn periodicity() {
        for l in 0..200u32 {
            let (a, b) = (dim_formula(l), dim_formula(l + 12));
            assert_eq!(b.plus, a.plus + 1);
            assert_eq!(b.minus, a.minus + 1);
        }
    }

    #[test]
    fn theta_values() {
        for l in 0..30u32 {
            let c3 = CharacterInput::new(rat(3)).unwrap();
            assert_eq!(theta_character(l, &c3), rat(2 * l as i64 + 1));
            let cm = CharacterInput::new(rat(-1)).unwrap();
            assert_eq!(theta_character(l, &cm), rat(if l % 2 == 0 { 1 } else { -1 }));
            let c0 = CharacterInput::new(rat(0)).unwrap();
            assert_eq!(theta_character(l, &c0), rat(chi3(l)));
        }
        assert!(CharacterInput::new(rat(4)).is_err());
    }

    #[test]
    fn trace_formula_examples() {
        assert_eq!(dim_via_trace_formula(3), 1);
        assert_eq!(dim_via_trace_formula(11), 1);
        assert_eq!(trace_t2_formula(3), -1);
        assert_eq!(trace_t2_formula(4), 1);
        assert_eq!(trace_t2_formula(5), 0);
    }

    #[test]
    fn series_examples() {
        assert_eq!(generating_series_coeff(Series::Plus, 7), 1);
        assert_eq!(generating_series_coeff(Series::Minus, 6), 1);
        for l in 6..60 {
            assert_eq!(
                generating_series_coeff(Series::Minus, l),
                generating_series_coeff(Series::Plus, l - 6)
            );
        }
    }

    #[test]
    fn t_p_trace_of_constants() {
        for p in [2u64, 3, 5, 7] {
            let expected = if p == 2 { 1 } else { p as i64 + 1 };
            assert_eq!(trace_t_p_formula(p, 0).unwrap(), rat(expected));
        }
    }
}
