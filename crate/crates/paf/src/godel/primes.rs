use std::sync::{Mutex, OnceLock};

/// Memoized ascending prime sequence, `p_0 = 2, p_1 = 3, p_2 = 5, ...`
/// Extension is trial division by the primes already known; concurrent
/// readers always observe one consistent sequence.
pub struct Primes {
    known: Mutex<Vec<u64>>,
}

impl Primes {
    pub fn new() -> Self {
        Primes {
            known: Mutex::new(vec![2, 3]),
        }
    }

    /// The `(n+1)`-th prime `p_n`.
    pub fn nth(&self, n: usize) -> u64 {
        let mut known = self.known.lock().unwrap();
        while known.len() <= n {
            let mut candidate = known.last().unwrap() + 2;
            loop {
                if is_prime_given(&known, candidate) {
                    break;
                }
                candidate += 2;
            }
            known.push(candidate);
        }
        known[n]
    }

}

impl Default for Primes {
    fn default() -> Self {
        Primes::new()
    }
}

fn is_prime_given(known: &[u64], candidate: u64) -> bool {
    for &p in known {
        if p * p > candidate {
            return true;
        }
        if candidate.is_multiple_of(p) {
            return false;
        }
    }
    true
}

fn global() -> &'static Primes {
    static PRIMES: OnceLock<Primes> = OnceLock::new();
    PRIMES.get_or_init(Primes::new)
}

/// The `(n+1)`-th prime from the shared sequence.
pub fn nth_prime(n: usize) -> u64 {
    global().nth(n)
}

/// Checks `p_n < 2^(2^(n+1))` by comparing bit lengths: the bound
/// holds exactly when `bitlen(p_n) <= 2^(n+1)`, so no tower-sized
/// number is ever materialized.
pub fn check_lemma2(n: usize) -> bool {
    let p = nth_prime(n);
    let bitlen = u64::from(u64::BITS - p.leading_zeros());
    match u32::try_from(n + 1) {
        Ok(shift) if shift < 64 => bitlen <= (1u64 << shift),
        // 2^(n+1) >= 2^64 > 64 >= bitlen of any u64.
        _ => true,
    }
}
