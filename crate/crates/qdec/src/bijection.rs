//! The maps realizing the bijection between binary words avoiding
//! `1^{q+1}` and q-decreasing words of the same length.
//!
//! `psi` inserts `01^q` right after the last 0 of a word (appending
//! `1^{q+1}` to an all-ones word) and maps length n to length n+q+1.
//! `phi` is built from `psi` by a three-case recursion on the leading
//! 1-run; both directions are implemented iteratively so words of
//! length in the thousands do not exhaust the stack.

use crate::word::{Word, Q};
use crate::Error;

/// Insert `01^q` after the last 0 of `w`; append `1^{q+1}` when `w`
/// has no 0. Maps length n to n + q + 1.
pub fn psi(w: &Word, q: Q) -> Word {
    let q = q.get() as usize;
    let n = w.len();
    if w.count_ones() == n {
        return Word::ones(n + q + 1);
    }
    let t = w.trailing_ones();
    // w = v 0 1^t, output v 0 0 1^{t+q}
    let mut out = w.prefix(n - t);
    out.push(false);
    for _ in 0..t + q {
        out.push(true);
    }
    out
}

/// The unique preimage of `w` under `psi`, when it exists.
pub fn psi_inv(w: &Word, q: Q) -> Result<Word, Error> {
    let qv = q.get() as usize;
    let n = w.len();
    if n < qv + 1 {
        return Err(Error::NotInPsiImage(q.get()));
    }
    if w.count_ones() == n {
        return Ok(Word::ones(n - qv - 1));
    }
    let t = w.trailing_ones();
    if t < qv {
        return Err(Error::NotInPsiImage(q.get()));
    }
    // image words read v 0 0 1^{t} with t >= q; undo to v 0 1^{t-q}
    let p = n - 1 - t;
    if p == 0 || w.get(p - 1) {
        return Err(Error::NotInPsiImage(q.get()));
    }
    let mut out = w.prefix(p);
    for _ in 0..t - qv {
        out.push(true);
    }
    Ok(out)
}

enum Step {
    ApplyPsi,
    AppendTail(usize),
}

/// Map a word avoiding `1^{q+1}` to a q-decreasing word of the same
/// length: `1^k` maps to itself for `k <= q`, `1^q 0 v` to
/// `psi(phi(v))`, and `1^k 0 v` to `phi(v) 0 1^k` for `k < q`.
pub fn phi(w: &Word, q: Q) -> Result<Word, Error> {
    let qv = q.get() as usize;
    if !w.avoids_ones_run(qv + 1) {
        return Err(Error::ForbiddenOnesRun(qv + 1));
    }
    let mut steps = Vec::new();
    let mut idx = 0;
    let base = loop {
        let mut k = 0;
        while idx + k < w.len() && w.get(idx + k) {
            k += 1;
        }
        if idx + k == w.len() {
            break Word::ones(k);
        }
        steps.push(if k == qv {
            Step::ApplyPsi
        } else {
            Step::AppendTail(k)
        });
        idx += k + 1;
    };
    let mut out = base;
    for step in steps.into_iter().rev() {
        out = match step {
            Step::ApplyPsi => psi(&out, q),
            Step::AppendTail(k) => {
                let mut v = out;
                v.push(false);
                for _ in 0..k {
                    v.push(true);
                }
                v
            }
        };
    }
    Ok(out)
}

/// The unique preimage of a q-decreasing word under `phi`. Splits on
/// the trailing-ones count: at least q means the word came through
/// `psi`, fewer means a trailing `01^k` was appended.
pub fn phi_inv(w: &Word, q: Q) -> Result<Word, Error> {
    let qv = q.get() as usize;
    if !w.is_q_decreasing(q) {
        return Err(Error::NotQDecreasing(q.get()));
    }
    let mut prefix = Word::empty();
    let mut cur = w.clone();
    loop {
        let n = cur.len();
        if cur.count_ones() == n && n <= qv {
            return Ok(prefix.concat(&cur));
        }
        let t = cur.trailing_ones();
        if t >= qv {
            cur = psi_inv(&cur, q)?;
            for _ in 0..qv {
                prefix.push(true);
            }
            prefix.push(false);
        } else {
            cur = cur.prefix(n - t - 1);
            for _ in 0..t {
                prefix.push(true);
            }
            prefix.push(false);
        }
    }
}
