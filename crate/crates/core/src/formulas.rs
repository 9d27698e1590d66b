//! Closed-form edge counts.
//!
//! All counts are `u64`. Vertex counts are capped at `2^31` so that
//! `C(n, 2)` always fits; every product is overflow-checked anyway.

use std::fmt;

use crate::error::{invalid, Result};

/// Largest vertex count accepted by the formulas.
pub const MAX_VERTICES: usize = 1 << 31;

fn check_n(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(invalid(format!("n={n} exceeds the cap {MAX_VERTICES}")))
    } else {
        Ok(())
    }
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b)
        .ok_or_else(|| invalid(format!("overflow computing {a} * {b}")))
}

/// `C(n, 2)`.
pub fn pairs(n: usize) -> u64 {
    let n = n as u64;
    if n < 2 {
        0
    } else if n.is_multiple_of(2) {
        (n / 2) * (n - 1)
    } else {
        n * ((n - 1) / 2)
    }
}

/// `t(n, k)`, the edge count of the Turán graph `T(n, k)`.
pub fn turan_edges(n: usize, k: usize) -> Result<u64> {
    if k == 0 {
        return Err(invalid("t(n,k) needs k >= 1"));
    }
    check_n(n)?;
    let (q, r) = (n / k, n % k);
    let inside = mul(r as u64, pairs(q + 1))? + mul((k - r) as u64, pairs(q))?;
    Ok(pairs(n) - inside)
}

/// `g(n, k, s)`, the edge count of `G(n, k, s)`: `t(s, k-1) + s(n-s)`.
pub fn g_edges(n: usize, k: usize, s: usize) -> Result<u64> {
    if k == 0 {
        return Err(invalid("g(n,k,s) needs k >= 1"));
    }
    if s > n {
        return Err(invalid(format!("g(n,k,s) needs s <= n, got s={s}, n={n}")));
    }
    if k == 1 {
        return if s == 0 {
            Ok(0)
        } else {
            Err(invalid("g(n,1,s) is undefined for s > 0"))
        };
    }
    check_n(n)?;
    Ok(turan_edges(s, k - 1)? + mul(s as u64, (n - s) as u64)?)
}

/// Which term realizes the maximum in [`ex_edges`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Winner {
    Turan,
    Gks,
    Tie,
    /// `n <= 2s + 1`: the matching bound is vacuous and the answer is `t(n, k)`.
    SmallN,
}

impl Winner {
    pub fn as_str(self) -> &'static str {
        match self {
            Winner::Turan => "TURAN",
            Winner::Gks => "GKS",
            Winner::Tie => "TIE",
            Winner::SmallN => "SMALL_N",
        }
    }
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Maximum edge count of an `n`-vertex graph with clique number at most `k`
/// and matching number at most `s`, with both candidate terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    /// `t(2s+1, k)`; `t(n, k)` in the small-`n` regime.
    pub turan_branch: u64,
    /// `g(n, k, s)`, with `s` clipped to `n` in the small-`n` regime and 0 for `k = 1`.
    pub gks_branch: u64,
    pub value: u64,
    pub winner: Winner,
}

pub fn ex_edges(n: usize, k: usize, s: usize) -> Result<ExtremalResult> {
    if k == 0 {
        return Err(invalid("clique bound k must be >= 1"));
    }
    check_n(n)?;
    let gks = |s: usize| if k == 1 { Ok(0) } else { g_edges(n, k, s) };
    // n <= 2s + 1, written so that huge s cannot overflow.
    if n / 2 <= s {
        let t = turan_edges(n, k)?;
        return Ok(ExtremalResult {
            n,
            k,
            s,
            turan_branch: t,
            gks_branch: gks(s.min(n))?,
            value: t,
            winner: Winner::SmallN,
        });
    }
    let turan_branch = turan_edges(2 * s + 1, k)?;
    let gks_branch = gks(s)?;
    let winner = match turan_branch.cmp(&gks_branch) {
        std::cmp::Ordering::Greater => Winner::Turan,
        std::cmp::Ordering::Less => Winner::Gks,
        std::cmp::Ordering::Equal => Winner::Tie,
    };
    Ok(ExtremalResult {
        n,
        k,
        s,
        turan_branch,
        gks_branch,
        value: turan_branch.max(gks_branch),
        winner,
    })
}

/// Maximum edge count with matching number at most `s` and no clique bound.
pub fn erdos_gallai_edges(n: usize, s: usize) -> Result<u64> {
    Ok(ex_edges(n, n.max(1), s)?.value)
}

/// Upper bound `f(b) = t(2s-b+1, k) + b(n-2s+b-1)` on the edge count when the
/// Tutte–Berge set has size `b`, one odd component holds the rest of the
/// matching, and all other components are single vertices.
pub fn case4_f(n: usize, k: usize, s: usize, b: usize) -> Result<u64> {
    if k == 0 {
        return Err(invalid("k must be >= 1"));
    }
    if b > s {
        return Err(invalid(format!("b={b} exceeds s={s}")));
    }
    if s.checked_mul(2).is_none_or(|twice| n <= twice) {
        return Err(invalid(format!("f(b) needs n >= 2s+1, got n={n}, s={s}")));
    }
    check_n(n)?;
    let core = turan_edges(2 * s - b + 1, k)?;
    Ok(core + mul(b as u64, (n + b - 2 * s - 1) as u64)?)
}

/// Largest `b` in the range where the convexity argument is applied,
/// `s - floor(s / (k-1))`. Needs `k >= 2`.
pub fn case4_b_max(k: usize, s: usize) -> Result<usize> {
    if k < 2 {
        return Err(invalid("case 4 range needs k >= 2"));
    }
    Ok(s - s / (k - 1))
}
