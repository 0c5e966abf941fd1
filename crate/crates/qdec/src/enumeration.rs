//! Exact counting of q-decreasing words: k-generalized Fibonacci
//! numbers and truncated expansions of the rational generating
//! functions (counts, counts by number of 1s, parity differences,
//! popularity, 1s-frequency ratios).
//!
//! Everything is exact: arbitrary-precision integers throughout,
//! rationals for ratios. Series coefficients are extracted through the
//! linear recurrence induced by the denominator, never by floating
//! point or per-term long division.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::word::Q;
use crate::Error;

/// The k-generalized Fibonacci number `f_{n,k}`: zero up to index
/// k-2, one at k-1, then the sum of the previous k terms.
pub fn gen_fib(n: usize, k: usize) -> BigInt {
    assert!(k >= 2);
    if n <= k - 2 {
        return BigInt::zero();
    }
    let mut window: Vec<BigInt> = vec![BigInt::zero(); k];
    window[k - 1] = BigInt::one();
    // window holds f_{m-k+1..=m}, starting at m = k-1
    for _ in k - 1..n {
        let next: BigInt = window.iter().sum();
        window.remove(0);
        window.push(next);
    }
    window[k - 1].clone()
}

/// Number of q-decreasing words of length n, `f_{n+q+1, q+1}`.
pub fn count_qdecreasing(n: usize, q: Q) -> BigInt {
    let qv = q.get() as usize;
    gen_fib(n + qv + 1, qv + 1)
}

/// Which generating function a table expands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Fibonacci words of length n with k ones (bivariate).
    Bq,
    /// q-prime factors of length n with k ones (bivariate).
    Sq,
    /// q-decreasing words of length n with k ones (bivariate).
    Wq,
    /// q-decreasing words of length n.
    Fq,
    /// Parity difference (even-1s count minus odd-1s count).
    Dq,
    /// Popularity of 1s over all q-decreasing words of length n.
    P1,
    /// Popularity of 0s over all q-decreasing words of length n.
    P0,
    /// The auxiliary series whose coefficient at n is
    /// `f_{n+q+1,q+1} + v_{n,q} - u_{n,q}`.
    H,
}

impl Kind {
    pub fn is_bivariate(self) -> bool {
        matches!(self, Kind::Bq | Kind::Sq | Kind::Wq)
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Bq => "bq",
            Kind::Sq => "sq",
            Kind::Wq => "wq",
            Kind::Fq => "fq",
            Kind::Dq => "dq",
            Kind::P1 => "p1",
            Kind::P0 => "p0",
            Kind::H => "h",
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind, Error> {
        match s.to_ascii_lowercase().as_str() {
            "bq" => Ok(Kind::Bq),
            "sq" => Ok(Kind::Sq),
            "wq" => Ok(Kind::Wq),
            "fq" => Ok(Kind::Fq),
            "dq" => Ok(Kind::Dq),
            "p1" => Ok(Kind::P1),
            "p0" => Ok(Kind::P0),
            "h" => Ok(Kind::H),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Truncated coefficient table of one generating function.
#[derive(Debug, Clone)]
pub struct CountTable {
    pub kind: Kind,
    pub q: Q,
    pub n_max: usize,
    data: TableData,
}

#[derive(Debug, Clone)]
enum TableData {
    Univariate(Vec<BigInt>),
    /// Row n holds coefficients for k = 0..=n.
    Bivariate(Vec<Vec<BigInt>>),
}

impl CountTable {
    /// Coefficient of `x^n` (univariate kinds only).
    pub fn coeff(&self, n: usize) -> &BigInt {
        match &self.data {
            TableData::Univariate(v) => &v[n],
            TableData::Bivariate(_) => panic!("coeff() on a bivariate table"),
        }
    }

    /// Coefficient of `x^n y^k` (bivariate kinds only).
    pub fn coeff2(&self, n: usize, k: usize) -> BigInt {
        match &self.data {
            TableData::Bivariate(rows) => rows[n].get(k).cloned().unwrap_or_else(BigInt::zero),
            TableData::Univariate(_) => panic!("coeff2() on a univariate table"),
        }
    }

    /// Row of coefficients for fixed n, k = 0..=n.
    pub fn row(&self, n: usize) -> Vec<BigInt> {
        match &self.data {
            TableData::Bivariate(rows) => rows[n].clone(),
            TableData::Univariate(_) => panic!("row() on a univariate table"),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs = match &self.data {
            TableData::Univariate(v) => serde_json::Value::Array(
                v.iter()
                    .map(|c| serde_json::Value::String(c.to_string()))
                    .collect(),
            ),
            TableData::Bivariate(rows) => serde_json::Value::Array(
                rows.iter()
                    .map(|row| {
                        serde_json::Value::Array(
                            row.iter()
                                .map(|c| serde_json::Value::String(c.to_string()))
                                .collect(),
                        )
                    })
                    .collect(),
            ),
        };
        serde_json::json!({
            "kind": self.kind.name(),
            "q": self.q.get(),
            "n_max": self.n_max,
            "coeffs": coeffs,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.data {
            TableData::Univariate(v) => {
                out.push_str("n,coeff\n");
                for (n, c) in v.iter().enumerate() {
                    out.push_str(&format!("{},{}\n", n, c));
                }
            }
            TableData::Bivariate(rows) => {
                out.push_str("n,k,coeff\n");
                for (n, row) in rows.iter().enumerate() {
                    for (k, c) in row.iter().enumerate() {
                        out.push_str(&format!("{},{},{}\n", n, k, c));
                    }
                }
            }
        }
        out
    }
}

/// Sparse polynomial term `c * x^xd * y^yd` (yd unused univariately).
#[derive(Clone, Copy)]
struct Term {
    xd: usize,
    yd: usize,
    c: i64,
}

fn t(xd: usize, yd: usize, c: i64) -> Term {
    Term { xd, yd, c }
}

/// Expand num/den as a power series in x up to `n_max`. The
/// denominator must have constant term 1; coefficients then satisfy
/// `a_n = num_n - sum_{d >= 1} den_d * a_{n-d}`.
fn expand_univariate(num: &[Term], den: &[Term], n_max: usize) -> Vec<BigInt> {
    debug_assert!(den.iter().any(|t| t.xd == 0 && t.c == 1));
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut a: BigInt = num
            .iter()
            .filter(|t| t.xd == n)
            .map(|t| BigInt::from(t.c))
            .sum();
        for term in den.iter().filter(|t| t.xd >= 1 && t.xd <= n) {
            a -= BigInt::from(term.c) * &coeffs[n - term.xd];
        }
        coeffs.push(a);
    }
    coeffs
}

/// Bivariate analogue; y-degree is capped at n (a length-n word has at
/// most n ones), giving a triangular table.
fn expand_bivariate(num: &[Term], den: &[Term], n_max: usize) -> Vec<Vec<BigInt>> {
    debug_assert!(den.iter().any(|t| t.xd == 0 && t.yd == 0 && t.c == 1));
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        for k in 0..=n {
            let mut a: BigInt = num
                .iter()
                .filter(|t| t.xd == n && t.yd == k)
                .map(|t| BigInt::from(t.c))
                .sum();
            for term in den.iter().filter(|t| t.xd >= 1 && t.xd <= n && t.yd <= k) {
                // rows are triangular: coefficient is 0 when the
                // y-degree exceeds the x-degree
                if k - term.yd <= n - term.xd {
                    a -= BigInt::from(term.c) * &rows[n - term.xd][k - term.yd];
                }
            }
            row[k] = a;
        }
        rows.push(row);
    }
    rows
}

fn numerator_denominator(kind: Kind, q: Q) -> (Vec<Term>, Vec<Term>) {
    let q = q.get() as usize;
    let qi = q as i64;
    // 1 - 2x + x^{q+2}, the denominator shared by Fq, P1, P0 and H
    let base_den = vec![t(0, 0, 1), t(1, 0, -2), t(q + 2, 0, 1)];
    // (1 - 2x + x^{q+2})^2; exponents 1, 2, q+2, q+3, 2q+4 are
    // pairwise distinct for q >= 1
    let base_den_sq = vec![
        t(0, 0, 1),
        t(1, 0, -4),
        t(2, 0, 4),
        t(q + 2, 0, 2),
        t(q + 3, 0, -4),
        t(2 * q + 4, 0, 1),
    ];
    match kind {
        Kind::Fq => (vec![t(0, 0, 1), t(q + 1, 0, -1)], base_den),
        Kind::Dq => {
            // (1 - s x^{q+1}) / (1 - s x^{q+2}) with s = (-1)^q
            let s = if q.is_multiple_of(2) { 1 } else { -1 };
            (
                vec![t(0, 0, 1), t(q + 1, 0, -s)],
                vec![t(0, 0, 1), t(q + 2, 0, -s)],
            )
        }
        Kind::P1 => (
            // x (1 - q x^q + (q-2) x^{q+1} + x^{2q+2})
            vec![
                t(1, 0, 1),
                t(q + 1, 0, -qi),
                t(q + 2, 0, qi - 2),
                t(2 * q + 3, 0, 1),
            ],
            base_den_sq,
        ),
        Kind::P0 => (vec![t(1, 0, 1), t(q + 1, 0, -1)], base_den_sq),
        Kind::H => (vec![t(0, 0, 1), t(q + 1, 0, -2)], base_den),
        Kind::Bq => (
            // (1 - (xy)^{q+1}) / (1 - x - xy + x^{q+2} y^{q+1})
            vec![t(0, 0, 1), t(q + 1, q + 1, -1)],
            vec![t(0, 0, 1), t(1, 0, -1), t(1, 1, -1), t(q + 2, q + 1, 1)],
        ),
        Kind::Wq => (
            vec![t(0, 0, 1), t(q + 1, q, -1)],
            vec![t(0, 0, 1), t(1, 1, -1), t(1, 0, -1), t(q + 2, q + 1, 1)],
        ),
        Kind::Sq => (
            // x (1 - (xy)^q) / ((1 - xy)(1 - x^{q+1} y^q))
            vec![t(1, 0, 1), t(q + 1, q, -1)],
            vec![t(0, 0, 1), t(1, 1, -1), t(q + 1, q, -1), t(q + 2, q + 1, 1)],
        ),
    }
}

/// Coefficients of the named generating function up to `x^{n_max}`
/// (all y-degrees for the bivariate kinds).
pub fn expand_series(kind: Kind, q: Q, n_max: usize) -> CountTable {
    let (num, den) = numerator_denominator(kind, q);
    let data = if kind.is_bivariate() {
        TableData::Bivariate(expand_bivariate(&num, &den, n_max))
    } else {
        TableData::Univariate(expand_univariate(&num, &den, n_max))
    };
    let table = CountTable {
        kind,
        q,
        n_max,
        data,
    };
    if kind == Kind::Dq {
        if let TableData::Univariate(v) = &table.data {
            debug_assert!(v.iter().all(|c| c.abs() <= BigInt::one()));
        }
    }
    table
}

/// Counts of length-n q-decreasing words with exactly k ones, for
/// k = 0..=n.
pub fn count_by_ones(n: usize, q: Q) -> Vec<BigInt> {
    expand_series(Kind::Wq, q, n).row(n)
}

/// Number of even-1s words minus number of odd-1s words in `W^q_n`;
/// always -1, 0 or 1.
pub fn parity_difference(n: usize, q: Q) -> i8 {
    let table = expand_series(Kind::Dq, q, n);
    let c = table.coeff(n);
    if c.is_zero() {
        0
    } else if c.is_positive() {
        1
    } else {
        -1
    }
}

/// Total occurrences of `symbol` over all words of `W^q_n`.
pub fn popularity(n: usize, q: Q, symbol: bool) -> BigInt {
    let kind = if symbol { Kind::P1 } else { Kind::P0 };
    expand_series(kind, q, n).coeff(n).clone()
}

/// 1s-popularity comparison between `W^q_n` and the Fibonacci words
/// `B_n(1^{q+1})`, with exact rational frequencies.
#[derive(Debug, Clone)]
pub struct FrequencyReport {
    pub n: usize,
    pub q: Q,
    /// Popularity of 1s in `W^q_n`.
    pub u: BigInt,
    /// Popularity of 1s in `B_n(1^{q+1})`.
    pub v: BigInt,
    /// `n * f_{n+q+1, q+1}`, the total number of bits in either set.
    pub total_bits: BigInt,
    /// `u / total_bits`.
    pub ratio_qdec: BigRational,
    /// `v / total_bits`.
    pub ratio_fib: BigRational,
}

pub fn frequency_report(n: usize, q: Q) -> FrequencyReport {
    assert!(n >= 1);
    let u = popularity(n, q, true);
    let b = expand_series(Kind::Bq, q, n);
    let v: BigInt = (0..=n).map(|k| BigInt::from(k) * b.coeff2(n, k)).sum();
    let total_bits = BigInt::from(n) * count_qdecreasing(n, q);
    debug_assert!(u >= v);
    debug_assert!(&u - &v <= count_qdecreasing(n, q));
    FrequencyReport {
        n,
        q,
        ratio_qdec: BigRational::new(u.clone(), total_bits.clone()),
        ratio_fib: BigRational::new(v.clone(), total_bits.clone()),
        u,
        v,
        total_bits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn q(v: u32) -> Q {
        Q::new(v).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn all_words(n: usize) -> Vec<Word> {
        (0u32..1 << n)
            .map(|x| Word::from_bits((0..n).map(|i| x >> (n - 1 - i) & 1 == 1)))
            .collect()
    }

    #[test]
    fn gen_fib_examples() {
        assert_eq!(gen_fib(0, 3), big(0));
        assert_eq!(gen_fib(2, 3), big(1));
        assert_eq!(gen_fib(8, 2), big(21));
        // classic Fibonacci tail: f_{n,2} = 0,1,1,2,3,5,8,...
        let fib2: Vec<BigInt> = (0..10).map(|n| gen_fib(n, 2)).collect();
        assert_eq!(fib2, [0, 1, 1, 2, 3, 5, 8, 13, 21, 34].map(big));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_qdecreasing(4, q(1)), big(8));
        assert_eq!(count_qdecreasing(6, q(1)), big(21));
        assert_eq!(count_qdecreasing(4, q(2)), big(13));
        assert_eq!(count_qdecreasing(0, q(3)), big(1));
    }

    #[test]
    fn fq_series_q1() {
        let table = expand_series(Kind::Fq, q(1), 6);
        let got: Vec<BigInt> = (0..=6).map(|n| table.coeff(n).clone()).collect();
        assert_eq!(got, [1, 2, 3, 5, 8, 13, 21].map(big));
    }

    #[test]
    fn dq_series_q1() {
        let table = expand_series(Kind::Dq, q(1), 6);
        let got: Vec<BigInt> = (0..=6).map(|n| table.coeff(n).clone()).collect();
        assert_eq!(got, [1, 0, 1, -1, 0, -1, 1].map(big));
    }

    #[test]
    fn sq_series_q1() {
        // q-prime factors for q = 1 are 0, 001, 00011, ...
        let table = expand_series(Kind::Sq, q(1), 5);
        for n in 0..=5 {
            for k in 0..=n {
                let expected = if (n, k) == (1, 0) || (n, k) == (3, 1) || (n, k) == (5, 2) {
                    big(1)
                } else {
                    big(0)
                };
                assert_eq!(table.coeff2(n, k), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn sq_series_q2_matches_listed_factors() {
        // S^2 = { 0, 01, 0011, 00111, 0001111, 00011111, ... }
        let table = expand_series(Kind::Sq, q(2), 8);
        let mut nonzero = Vec::new();
        for n in 0..=8 {
            for k in 0..=n {
                if !table.coeff2(n, k).is_zero() {
                    assert_eq!(table.coeff2(n, k), big(1));
                    nonzero.push((n, k));
                }
            }
        }
        assert_eq!(
            nonzero,
            vec![(1, 0), (2, 1), (4, 2), (5, 3), (7, 4), (8, 5)]
        );
    }

    #[test]
    fn count_by_ones_examples() {
        let row = count_by_ones(4, q(1));
        assert_eq!(row[0], big(1));
        assert_eq!(row[2], big(2));
        assert_eq!(row[4], big(1));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_difference(0, q(1)), 1);
        assert_eq!(parity_difference(2, q(1)), 1);
        assert_eq!(parity_difference(4, q(1)), 0);
    }

    #[test]
    fn popularity_examples() {
        assert_eq!(popularity(3, q(1), true), big(7));
        assert_eq!(popularity(3, q(1), false), big(8));
        assert_eq!(popularity(0, q(2), true), big(0));
    }

    #[test]
    fn tables_match_brute_force() {
        for qq in 1..=4u32 {
            let qp = q(qq);
            let wq = expand_series(Kind::Wq, qp, 10);
            let bq = expand_series(Kind::Bq, qp, 10);
            for n in 0..=10usize {
                let mut by_ones = vec![0i64; n + 1];
                let mut fib_by_ones = vec![0i64; n + 1];
                let mut parity = 0i64;
                let (mut pop1, mut pop0) = (0i64, 0i64);
                for word in all_words(n) {
                    if word.avoids_ones_run(qq as usize + 1) {
                        fib_by_ones[word.count_ones()] += 1;
                    }
                    if !word.is_q_decreasing(qp) {
                        continue;
                    }
                    let ones = word.count_ones();
                    by_ones[ones] += 1;
                    parity += if ones % 2 == 0 { 1 } else { -1 };
                    pop1 += ones as i64;
                    pop0 += (n - ones) as i64;
                }
                let total: i64 = by_ones.iter().sum();
                assert_eq!(count_qdecreasing(n, qp), big(total));
                for k in 0..=n {
                    assert_eq!(wq.coeff2(n, k), big(by_ones[k]), "Wq n={n} k={k} q={qq}");
                    assert_eq!(
                        bq.coeff2(n, k),
                        big(fib_by_ones[k]),
                        "Bq n={n} k={k} q={qq}"
                    );
                }
                assert_eq!(parity_difference(n, qp) as i64, parity);
                assert_eq!(popularity(n, qp, true), big(pop1));
                assert_eq!(popularity(n, qp, false), big(pop0));
            }
        }
    }

    #[test]
    fn wq_rows_sum_to_fq() {
        for qq in 1..=3u32 {
            let qp = q(qq);
            let wq = expand_series(Kind::Wq, qp, 14);
            let fq = expand_series(Kind::Fq, qp, 14);
            for n in 0..=14usize {
                let sum: BigInt = (0..=n).map(|k| wq.coeff2(n, k)).sum();
                assert_eq!(&sum, fq.coeff(n));
                assert_eq!(fq.coeff(n), &count_qdecreasing(n, qp));
            }
        }
    }

    #[test]
    fn bq_marginal_counts_fibonacci_words() {
        for qq in 1..=3u32 {
            let qp = q(qq);
            let bq = expand_series(Kind::Bq, qp, 14);
            for n in 0..=14usize {
                let sum: BigInt = (0..=n).map(|k| bq.coeff2(n, k)).sum();
                assert_eq!(sum, gen_fib(n + qq as usize + 1, qq as usize + 1));
            }
        }
    }

    #[test]
    fn dq_coefficient_pattern() {
        // even q: +1 at n = 0 mod q+2, -1 at n = q+1 mod q+2;
        // odd q: (-1)^m at n = m(q+2) and n = m(q+2)+q+1
        for qq in 1..=5u32 {
            let qp = q(qq);
            let table = expand_series(Kind::Dq, qp, 60);
            let period = qq as usize + 2;
            let s: i64 = if qq % 2 == 0 { 1 } else { -1 };
            for n in 0..=60usize {
                let m = (n / period) as u32;
                let expected = if n % period == 0 {
                    s.pow(m)
                } else if n % period == qq as usize + 1 {
                    -s.pow(m + 1)
                } else {
                    0
                };
                assert_eq!(table.coeff(n), &big(expected), "q={qq} n={n}");
            }
        }
    }

    #[test]
    fn h_series_identity() {
        // coefficient of x^n in H is f_{n+q+1,q+1} + v_{n,q} - u_{n,q}
        for qq in 1..=3u32 {
            let qp = q(qq);
            let h = expand_series(Kind::H, qp, 12);
            for n in 1..=12usize {
                let rep = frequency_report(n, qp);
                let expected = gen_fib(n + qq as usize + 1, qq as usize + 1) + &rep.v - &rep.u;
                assert_eq!(h.coeff(n), &expected, "q={qq} n={n}");
            }
        }
    }

    #[test]
    fn frequency_report_small() {
        let rep = frequency_report(1, q(1));
        assert_eq!(rep.u, big(1));
        assert_eq!(rep.total_bits, big(2));
        assert_eq!(rep.ratio_qdec, BigRational::new(big(1), big(2)));
    }

    #[test]
    fn popularity_difference_bounded() {
        for qq in 1..=3u32 {
            let qp = q(qq);
            for n in 1..=14usize {
                let rep = frequency_report(n, qp);
                assert!(rep.u >= rep.v, "q={qq} n={n}");
                assert!(&rep.u - &rep.v <= count_qdecreasing(n, qp), "q={qq} n={n}");
            }
        }
    }

    #[test]
    fn table_serialization() {
        let table = expand_series(Kind::Fq, q(1), 4);
        let json = table.to_json();
        assert_eq!(json["kind"], "fq");
        assert_eq!(json["coeffs"][4], "8");
        let csv = table.to_csv();
        assert!(csv.starts_with("n,coeff\n"));
        assert!(csv.contains("\n4,8\n"));
        assert_eq!(
            "nope".parse::<Kind>(),
            Err(Error::UnknownKind("nope".into()))
        );
    }
}
