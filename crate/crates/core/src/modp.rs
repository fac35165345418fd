//! Arithmetic in the prime field of order 2^61 - 1, used for randomized rank
//! computations. Exact rational elimination on the sampled evaluation
//! matrices is correct but its entries grow without bound; reducing the exact
//! values into a fixed large prime field keeps every elimination step O(1)
//! while preserving ranks except with vanishing probability.

use crate::scalar::Rat;
use crate::{Error, Result};
use num::bigint::BigInt;
use num::{Integer, ToPrimitive};

pub const P: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: u64) -> Fp {
        Fp(v % P)
    }

    pub fn zero() -> Fp {
        Fp(0)
    }

    pub fn one() -> Fp {
        Fp(1)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn add(self, o: Fp) -> Fp {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }

    pub fn sub(self, o: Fp) -> Fp {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }

    pub fn mul(self, o: Fp) -> Fp {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }

    pub fn inv(self) -> Result<Fp> {
        if self.is_zero() {
            return Err(Error::InvalidInput("division by zero in the sampling field".into()));
        }
        // Fermat: a^(P-2)
        let mut base = self;
        let mut acc = Fp::one();
        let mut e = P - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        Ok(acc)
    }
}

fn bigint_mod_p(v: &BigInt) -> u64 {
    v.mod_floor(&BigInt::from(P)).to_u64().expect("value below P fits u64")
}

/// Reduce an exact rational into the field. Fails only when the denominator
/// is divisible by the prime, which cannot happen for the small-denominator
/// samples used throughout this crate.
pub fn rat_to_fp(r: &Rat) -> Result<Fp> {
    let n = Fp::new(bigint_mod_p(r.numer()));
    let d = Fp::new(bigint_mod_p(r.denom()));
    Ok(n.mul(d.inv()?))
}

/// Column echelon basis over the prime field, for incremental rank and
/// membership queries.
#[derive(Clone)]
pub struct EchelonFp {
    len: usize,
    // (pivot row, column scaled to pivot 1)
    cols: Vec<(usize, Vec<Fp>)>,
}

impl EchelonFp {
    pub fn new(len: usize) -> EchelonFp {
        EchelonFp { len, cols: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.cols.len()
    }

    fn reduce(&self, col: &mut [Fp]) {
        for (pivot, basis) in &self.cols {
            let c = col[*pivot];
            if !c.is_zero() {
                for (x, b) in col.iter_mut().zip(basis.iter()) {
                    *x = x.sub(c.mul(*b));
                }
            }
        }
    }

    pub fn contains(&self, col: &[Fp]) -> bool {
        assert_eq!(col.len(), self.len);
        let mut work = col.to_vec();
        self.reduce(&mut work);
        work.iter().all(|x| x.is_zero())
    }

    /// Returns true when the column enlarged the span.
    pub fn insert(&mut self, col: &[Fp]) -> bool {
        assert_eq!(col.len(), self.len);
        let mut work = col.to_vec();
        self.reduce(&mut work);
        match work.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(pivot) => {
                let scale = work[pivot].inv().expect("nonzero pivot");
                for x in work.iter_mut() {
                    *x = x.mul(scale);
                }
                self.cols.push((pivot, work));
                true
            }
        }
    }
}
