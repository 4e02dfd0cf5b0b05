//! Rigorous elementary bounds: directed-rounding intervals over f64,
//! the Stirling enclosure of `ln(z!)`, and certified lower bounds on
//! `ln ln` of the factorial tower `3, 3!, (3!)!, ...`.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

/// Slack applied around every transcendental evaluation, in ulps.
/// Library `ln` is faithfully rounded (error below 1 ulp); four ulps
/// leave a wide margin and stay far below the enclosure widths the
/// checks care about.
const LN_ULPS: u32 = 4;

pub(crate) fn down(mut x: f64, ulps: u32) -> f64 {
    for _ in 0..ulps {
        x = x.next_down();
    }
    x
}

pub(crate) fn up(mut x: f64, ulps: u32) -> f64 {
    for _ in 0..ulps {
        x = x.next_up();
    }
    x
}

/// A closed interval guaranteed to contain the exact value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub lo: f64,
    pub hi: f64,
}

// interval arithmetic reads best with the plain operation names
#[allow(clippy::should_implement_trait)]
impl Bounds {
    pub fn exact(x: f64) -> Bounds {
        Bounds { lo: x, hi: x }
    }

    pub fn from_u64(z: u64) -> Bounds {
        let x = z as f64;
        if z <= (1u64 << 53) {
            Bounds::exact(x)
        } else {
            Bounds {
                lo: down(x, 1),
                hi: up(x, 1),
            }
        }
    }

    pub fn add(self, o: Bounds) -> Bounds {
        Bounds {
            lo: down(self.lo + o.lo, 1),
            hi: up(self.hi + o.hi, 1),
        }
    }

    pub fn sub(self, o: Bounds) -> Bounds {
        Bounds {
            lo: down(self.lo - o.hi, 1),
            hi: up(self.hi - o.lo, 1),
        }
    }

    pub fn mul(self, o: Bounds) -> Bounds {
        let products = [
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        ];
        let lo = products.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = products.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Bounds {
            lo: down(lo, 1),
            hi: up(hi, 1),
        }
    }

    pub fn ln(self) -> Bounds {
        debug_assert!(self.lo > 0.0);
        Bounds {
            lo: down(self.lo.ln(), LN_ULPS),
            hi: up(self.hi.ln(), LN_ULPS),
        }
    }

    /// Exact in binary.
    pub fn half(self) -> Bounds {
        Bounds {
            lo: self.lo * 0.5,
            hi: self.hi * 0.5,
        }
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

fn two_pi() -> Bounds {
    let v = 2.0 * std::f64::consts::PI;
    Bounds {
        lo: down(v, 2),
        hi: up(v, 2),
    }
}

pub(crate) fn ln2() -> Bounds {
    Bounds {
        lo: down(std::f64::consts::LN_2, 2),
        hi: up(std::f64::consts::LN_2, 2),
    }
}

/// Enclosure of `ln(z!)` from the Stirling form
/// `z ln(z/e) + ln(2 pi z)/2 + theta/(12 z)` with `theta` in `(0,1)`:
/// the lower end takes `theta -> 0`, the upper end `theta -> 1`, and
/// every elementary evaluation is directionally rounded. The width is
/// therefore at most `1/(12 z)` plus rounding slack; the tests enforce
/// `1/(12 z) + 1e-9 * max(1, ln(z!))`.
pub fn stirling_ln_factorial(z: u64) -> Bounds {
    assert!(z >= 1, "stirling needs z >= 1");
    let zf = Bounds::from_u64(z);
    let s = zf
        .mul(zf.ln())
        .sub(zf)
        .add(two_pi().mul(zf).ln().half());
    let theta_hi = up(1.0 / (12.0 * z as f64), 2);
    Bounds {
        lo: s.lo,
        hi: up(s.hi + theta_hi, 1),
    }
}

/// `ln(b!) > b`. Exact summation below 8, the Stirling lower bound for
/// any machine-sized `b`, and for larger naturals the integral
/// comparison `ln(b!) >= b ln b - b + 1 > b`, valid as soon as
/// `ln b > 2`.
pub fn ln_factorial_exceeds_arg(b: &BigUint) -> bool {
    if let Ok(small) = u64::try_from(b) {
        if small < 8 {
            let mut sum = 0.0f64;
            for i in 2..=small {
                sum += (i as f64).ln();
            }
            return down(sum, 8) > small as f64;
        }
        return stirling_ln_factorial(small).lo > small as f64;
    }
    *b >= BigUint::from(8u32)
}

/// Exact factorial tower over 3: `tower(0) = 3`, `tower(m) =
/// tower(m-1)!`. Only the first four values are materializable.
pub fn tower_exact(m: u64) -> Option<BigUint> {
    match m {
        0 => Some(BigUint::from(3u32)),
        1 => Some(BigUint::from(6u32)),
        2 => Some(BigUint::from(720u32)),
        3 => Some(factorial_720().clone()),
        _ => None,
    }
}

fn factorial_720() -> &'static BigUint {
    static F: OnceLock<BigUint> = OnceLock::new();
    F.get_or_init(|| (1u32..=720).fold(BigUint::one(), |acc, i| acc * i))
}

/// A certified lower bound on `tower(m)`: exact through `m = 3`, and
/// the (gross, but sufficient) monotone bound `tower(3) = 720!` above.
pub fn tower_lower_bound(m: u64) -> BigUint {
    tower_exact(m.min(3)).expect("indices <= 3 are materializable")
}

/// A certified lower bound on `ln ln tower(n)`.
#[derive(Debug, Clone, PartialEq)]
pub enum TowerFloor {
    /// Direct evaluation, for the small towers.
    Value(f64),
    /// `ln ln tower(n)` strictly exceeds this natural number.
    Exceeds(BigUint),
}

impl TowerFloor {
    pub fn at_least(&self, x: u64) -> bool {
        match self {
            TowerFloor::Value(v) => *v >= x as f64,
            TowerFloor::Exceeds(b) => *b >= BigUint::from(x),
        }
    }
}

impl std::fmt::Display for TowerFloor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TowerFloor::Value(v) => write!(f, "{v}"),
            TowerFloor::Exceeds(b) => {
                let digits = b.to_string().len();
                write!(f, "an integer of {digits} decimal digits")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error("the ln ln floor needs a tower of height at least 2, got {n}")]
    TooShort { n: u64 },
    #[error("the 8N bound holds from N = 4 on, got {n}")]
    BelowFour { n: u64 },
}

/// Lower-bounds `ln ln tower(n)`. For `n = 2, 3` the value is small
/// and evaluated directly (via the Stirling enclosure for `n = 3`).
/// From `n = 4` on the chain `ln tower(n) > tower(n-1)` and
/// `ln ln tower(n) > tower(n-2)` applies, each step backed by
/// `ln(b!) > b`; the returned floor is `tower(n-2)`, exact through
/// `n = 5` and lower-bounded by `720!` beyond.
pub fn tower_lnln_floor(n: u64) -> Result<TowerFloor, TowerError> {
    match n {
        0 | 1 => Err(TowerError::TooShort { n }),
        2 => {
            let ln720 = Bounds::from_u64(720).ln();
            Ok(TowerFloor::Value(ln720.ln().lo))
        }
        3 => {
            let ln_fact = stirling_ln_factorial(720);
            Ok(TowerFloor::Value(ln_fact.ln().lo))
        }
        _ => {
            // ln ln tower(n) > ln tower(n-1) > tower(n-2), valid since
            // ln(b!) > b at b = tower(n-1) and b = tower(n-2), both >= 720
            let step_outer = ln_factorial_exceeds_arg(&tower_lower_bound(n - 1));
            let step_inner = ln_factorial_exceeds_arg(&tower_lower_bound(n - 2));
            debug_assert!(step_outer && step_inner);
            if !(step_outer && step_inner) {
                return Err(TowerError::TooShort { n });
            }
            Ok(TowerFloor::Exceeds(tower_lower_bound(n - 2)))
        }
    }
}

/// The tower bound in the form the certificate uses: for `n >= 4`,
/// verifies both `tower(n-2) > 8n` and that the floor reaches `8n`,
/// so `tower(n) > e^(e^(8n))`.
pub fn lemma4_check(n: u64) -> Result<TowerFloor, TowerError> {
    if n < 4 {
        return Err(TowerError::BelowFour { n });
    }
    let floor = tower_lnln_floor(n)?;
    let side_claim = tower_lower_bound(n - 2) > BigUint::from(8 * n);
    if !side_claim || !floor.at_least(8 * n) {
        return Err(TowerError::BelowFour { n });
    }
    Ok(floor)
}
