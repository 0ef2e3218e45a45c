use crate::error::{Error, Result};
use crate::polycore::Poly;

/// Degree of `f`, rejecting the inputs the theorem does not cover: `f = 0`
/// has infinitely many solutions and constant `f ≠ 0` has none.
pub fn check_f(f: &Poly) -> Result<usize> {
    match f.deg() {
        None => Err(Error::ZeroF),
        Some(0) => Err(Error::ConstantF),
        Some(d) => Ok(d),
    }
}

/// `4 + 12·deg f + 8·(deg f)^2`, the bound on `max{n, m, deg p, deg q}`.
pub fn bound_b(f: &Poly) -> Result<u64> {
    let d = check_f(f)? as u64;
    Ok(bound_for_degree(d))
}

pub fn bound_for_degree(d: u64) -> u64 {
    4 + 12 * d + 8 * d * d
}

/// A candidate `(n, m, deg p, deg q)` that passes the necessary conditions
/// derived from the height inequalities. Orders lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissibleTuple {
    pub n: u32,
    pub m: u32,
    pub dp: u32,
    pub dq: u32,
}

impl AdmissibleTuple {
    pub fn new(n: u32, m: u32, dp: u32, dq: u32) -> AdmissibleTuple {
        AdmissibleTuple { n, m, dp, dq }
    }

    /// Checks the tuple against a polynomial of degree `deg_f`:
    ///
    /// * `n, m >= 2` and `dp, dq >= 1`
    /// * `n·dp <= 1 + 2·deg f + dp + dq`, and likewise `m·dq`
    /// * unequal `n·dp`, `m·dq` means the larger one equals `deg f`;
    ///   equal means they are at least `deg f`
    /// * every entry is at most `B(f)`
    pub fn satisfies(&self, deg_f: u64) -> bool {
        let (n, m, dp, dq) = (self.n as u64, self.m as u64, self.dp as u64, self.dq as u64);
        if n < 2 || m < 2 || dp < 1 || dq < 1 {
            return false;
        }
        let b = bound_for_degree(deg_f);
        if n.max(m).max(dp).max(dq) > b {
            return false;
        }
        let rhs = 1 + 2 * deg_f + dp + dq;
        let (lp, lq) = (n * dp, m * dq);
        if lp > rhs || lq > rhs {
            return false;
        }
        if lp != lq {
            lp.max(lq) == deg_f
        } else {
            lp >= deg_f
        }
    }
}

/// Every tuple satisfying [`AdmissibleTuple::satisfies`], sorted.
///
/// These are necessary conditions only: a listed tuple need not carry any
/// solution.
pub fn admissible_tuples(f: &Poly) -> Result<Vec<AdmissibleTuple>> {
    let d = check_f(f)? as u64;
    let b = bound_for_degree(d);
    let mut out = Vec::new();
    for dp in 1..=b {
        for dq in 1..=b {
            let rhs = 1 + 2 * d + dp + dq;
            for n in 2..=(rhs / dp).min(b) {
                for m in 2..=(rhs / dq).min(b) {
                    let t = AdmissibleTuple::new(n as u32, m as u32, dp as u32, dq as u32);
                    if t.satisfies(d) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}
