//! Exhaustive generation of q-decreasing words: streaming
//! lexicographic generation in constant amortized time, the 3-Gray
//! listing obtained by restricting BRGC order, and the recursive
//! 1-Gray code for q = 1 built from diagonal lists.

use std::collections::{BTreeMap, HashSet};

use crate::word::{pattern_001_star, zero_then_001_star, zeros_ones, Word, Q};
use crate::Error;

/// An ordered list of equal-length words with the combinators the
/// 1-Gray construction is written in: concatenation, reversal,
/// parity-conditional reversal, drop-first and prefixing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordList {
    words: Vec<Word>,
}

impl WordList {
    pub fn new() -> WordList {
        WordList { words: Vec::new() }
    }

    pub fn singleton(w: Word) -> WordList {
        WordList { words: vec![w] }
    }

    pub fn from_words(words: Vec<Word>) -> WordList {
        WordList { words }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first(&self) -> Option<&Word> {
        self.words.first()
    }

    pub fn last(&self) -> Option<&Word> {
        self.words.last()
    }

    /// List concatenation.
    pub fn concat(mut self, mut other: WordList) -> WordList {
        self.words.append(&mut other.words);
        self
    }

    pub fn reversed(mut self) -> WordList {
        self.words.reverse();
        self
    }

    /// Identity for even `i`, reversal for odd `i`.
    pub fn alternated(self, i: usize) -> WordList {
        if i.is_multiple_of(2) {
            self
        } else {
            self.reversed()
        }
    }

    /// The list without its first element.
    pub fn drop_first(mut self) -> WordList {
        if !self.words.is_empty() {
            self.words.remove(0);
        }
        self
    }

    /// Concatenate `prefix` to every word.
    pub fn prefixed(&self, prefix: &Word) -> WordList {
        WordList {
            words: self.words.iter().map(|w| prefix.concat(w)).collect(),
        }
    }
}

impl Default for WordList {
    fn default() -> WordList {
        WordList::new()
    }
}

/// Every q-decreasing word of length n by filtering all 2^n binary
/// words, in lexicographic order. The independent oracle the
/// generators are verified against; only usable at small n.
pub fn brute_force_qdecreasing(n: usize, q: Q) -> Vec<Word> {
    assert!(n < 28, "brute force oracle is limited to small n");
    (0u64..1 << n)
        .map(|x| Word::from_bits((0..n).map(|i| x >> (n - 1 - i) & 1 == 1)))
        .filter(|w| w.is_q_decreasing(q))
        .collect()
}

/// Stream all words of `W^q_n` in increasing lexicographic order.
/// Returns the number of emitted words. The sink receives the bits of
/// each word, leftmost first.
pub fn lex_stream<F: FnMut(&[bool])>(n: usize, q: Q, sink: F) -> u64 {
    lex_stream_instrumented(n, q, sink).0
}

/// As `lex_stream`, additionally counting recursive invocations so
/// the constant-amortized-time property can be measured.
pub fn lex_stream_instrumented<F: FnMut(&[bool])>(n: usize, q: Q, mut sink: F) -> (u64, u64) {
    struct Ctx<'a, F> {
        n: usize,
        q: u64,
        w: Vec<bool>,
        sink: &'a mut F,
        words: u64,
        calls: u64,
    }

    // position 0 is the virtual sentinel 1, so the budget after the
    // very first 0 resets to q - 1
    fn rec<F: FnMut(&[bool])>(ctx: &mut Ctx<'_, F>, pos: usize, delta: u64) {
        ctx.calls += 1;
        if pos == ctx.n + 1 {
            ctx.words += 1;
            (ctx.sink)(&ctx.w[1..]);
            return;
        }
        ctx.w[pos] = false;
        let d = if ctx.w[pos - 1] {
            ctx.q - 1
        } else {
            delta + ctx.q
        };
        rec(ctx, pos + 1, d);
        if delta > 0 {
            ctx.w[pos] = true;
            rec(ctx, pos + 1, delta - 1);
        }
    }

    let mut w = vec![false; n + 1];
    w[0] = true;
    let mut ctx = Ctx {
        n,
        q: q.get() as u64,
        w,
        sink: &mut sink,
        words: 0,
        calls: 0,
    };
    rec(&mut ctx, 1, n as u64);
    (ctx.words, ctx.calls)
}

/// Materialize `W^q_n` in lexicographic order.
pub fn lex_list(n: usize, q: Q) -> WordList {
    let mut words = Vec::new();
    lex_stream(n, q, |bits| {
        words.push(Word::from_bits(bits.iter().copied()))
    });
    WordList::from_words(words)
}

/// The rank of `w` in the binary reflected Gray code over words of its
/// length, returned as a same-length bit string (prefix XOR of the
/// word), so that comparing rank words compares ranks numerically.
pub fn brgc_rank_bits(w: &Word) -> Word {
    let mut acc = false;
    Word::from_bits(w.iter().map(|b| {
        acc ^= b;
        acc
    }))
}

/// All words of `W^q_n` ordered by their BRGC rank; successive words
/// differ in at most 3 positions.
pub fn brgc_list(n: usize, q: Q) -> WordList {
    let mut words = lex_list(n, q).into_words();
    words.sort_by_key(brgc_rank_bits);
    WordList::from_words(words)
}

/// 1-Gray codes `Z_0..=Z_n` for the q = 1-decreasing words starting
/// with 0, built bottom-up so each level can reuse the smaller ones.
fn build_z_cache(n: usize) -> Vec<WordList> {
    let mut cache: Vec<WordList> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let list = assemble_z(m, &cache);
        cache.push(list);
    }
    cache
}

fn assemble_z(n: usize, z: &[WordList]) -> WordList {
    match n {
        0 => WordList::singleton(Word::empty()),
        1 => WordList::singleton("0".parse().unwrap()),
        2 => WordList::singleton("00".parse().unwrap()),
        3 => WordList::from_words(vec!["000".parse().unwrap(), "001".parse().unwrap()]),
        _ => {
            let (asc_top, mid, desc_top) = match n % 4 {
                1 => (n, vec![Word::zeros(n)], n - 2),
                2 => (n - 1, vec![Word::zeros(n)], n - 3),
                3 => (n - 2, vec![Word::zeros(n)], n),
                _ => (n - 3, vec![zeros_ones(n - 1, 1), Word::zeros(n)], n - 1),
            };
            let mut list = WordList::new();
            let mut r = 5;
            while r <= asc_top {
                list = list.concat(delta_from_cache(n, r, z).expect("ascending delta"));
                r += 4;
            }
            list = list.concat(WordList::from_words(mid));
            let mut r = desc_top;
            loop {
                list = list.concat(delta_from_cache(n, r, z).expect("descending delta"));
                if r == 3 {
                    break;
                }
                r -= 4;
            }
            debug_assert!(check_z(n, &list));
            list
        }
    }
}

#[cfg(debug_assertions)]
fn check_z(n: usize, list: &WordList) -> bool {
    assert_eq!(list.first(), Some(&zero_then_001_star(n)), "Z_{n} first");
    assert_eq!(list.last(), Some(&pattern_001_star(n)), "Z_{n} last");
    for pair in list.words().windows(2) {
        assert_eq!(pair[0].hamming(&pair[1]), Ok(1), "Z_{n} adjacency");
    }
    true
}

#[cfg(not(debug_assertions))]
fn check_z(_n: usize, _list: &WordList) -> bool {
    true
}

/// The 1-Gray code for the q = 1-decreasing words of length n that
/// start with 0 (plus the small base lists), from `0(001)^*` to
/// `(001)^*`.
pub fn gray1_z(n: usize) -> WordList {
    build_z_cache(n).pop().unwrap()
}

/// The diagonal list `Δ_n^r`: a 1-Gray code covering the diagonal
/// `D_n^r` together with its companion diagonals, as dictated by the
/// residue of r mod 4 and the boundary cases near r = n.
pub fn delta_list(n: usize, r: usize) -> Result<WordList, Error> {
    if r < 3 || r > n {
        return Err(Error::DeltaPrecondition(format!(
            "need 3 <= r <= n, got r={r} n={n}"
        )));
    }
    let cache = build_z_cache(n.saturating_sub(3).max(3));
    delta_from_cache(n, r, &cache)
}

fn delta_from_cache(n: usize, r: usize, z: &[WordList]) -> Result<WordList, Error> {
    if r < 3 || r > n {
        return Err(Error::DeltaPrecondition(format!(
            "need 3 <= r <= n, got r={r} n={n}"
        )));
    }
    let list = match r % 4 {
        1 => {
            if r == n - 1 {
                if n % 4 != 2 {
                    return Err(Error::DeltaPrecondition(format!(
                        "r = n-1 with r = 1 mod 4 needs n = 2 mod 4, got n={n}"
                    )));
                }
                delta_r1_top(n)
            } else {
                delta_r1_generic(n, r, z)
            }
        }
        3 => {
            if r == 3 {
                // D_n^3 is the single cell 001 . Z_{n-3}
                z[n - 3].prefixed(&"001".parse().unwrap())
            } else if r == n - 2 {
                delta_r3_almost_top(n, z)
            } else if r == n - 1 {
                delta_r3_near_top(n, z)
            } else if r == n {
                delta_r3_top(n)
            } else {
                delta_r3_generic(n, r, z)
            }
        }
        _ => {
            return Err(Error::DeltaPrecondition(format!(
                "r must be 1 or 3 mod 4, got r={r}"
            )))
        }
    };
    debug_assert!(check_delta(n, r, z, &list));
    Ok(list)
}

/// r = 1 mod 4, r != n-1.
fn delta_r1_generic(n: usize, r: usize, z: &[WordList]) -> WordList {
    let mut list = WordList::new();
    for j in 1..=(r - 3) / 2 {
        list = list.concat(
            z[n - r + 1]
                .clone()
                .alternated(j)
                .prefixed(&zeros_ones(r - 1 - j, j)),
        );
    }
    let mut second = WordList::new();
    for j in 1..=(r - 1) / 2 {
        second = second.concat(
            z[n - r]
                .clone()
                .alternated(j)
                .prefixed(&zeros_ones(r - j, j)),
        );
    }
    list.concat(second.reversed())
}

/// r = n-1 = 1 mod 4 (so n = 2 mod 4); covers the three top diagonals.
fn delta_r1_top(n: usize) -> WordList {
    let mut list = WordList::new();
    for j in 1..=(n - 4) / 2 {
        list = list.concat(WordList::singleton(
            zeros_ones(n - 2 - j, j).concat(&Word::zeros(2)),
        ));
    }
    let mut mid = zeros_ones(n / 2, (n - 2) / 2);
    mid.push(false);
    list = list.concat(WordList::singleton(mid));
    let mut third = WordList::new();
    for j in 1..=(n - 4) / 2 {
        let pair = WordList::from_words(vec![
            zeros_ones(n - j - 1, j + 1),
            zeros_ones(n - 1 - j, j).concat(&Word::zeros(1)),
        ]);
        third = third.concat(pair.alternated(j - 1));
    }
    list.concat(third.reversed())
        .concat(WordList::singleton(zeros_ones(n - 1, 1)))
}

/// r = n-2 = 3 mod 4 (so n = 1 mod 4).
fn delta_r3_almost_top(n: usize, z: &[WordList]) -> WordList {
    let mut list = WordList::new();
    for j in 1..=(n - 5) / 2 {
        list = list.concat(
            z[3].clone()
                .alternated(j - 1)
                .prefixed(&zeros_ones(n - 3 - j, j)),
        );
    }
    let mut second = WordList::new();
    for j in 1..=(n - 3) / 2 {
        second = second.concat(z[2].prefixed(&zeros_ones(n - 2 - j, j)));
    }
    list.concat(second.reversed())
}

/// r = n-1 = 3 mod 4 (so n = 0 mod 4); skips the single word 0^{n-1}1,
/// which the enclosing Z_n assembly places next to 0^n.
fn delta_r3_near_top(n: usize, z: &[WordList]) -> WordList {
    let mut list = WordList::new();
    for j in 1..=(n - 4) / 2 {
        list = list.concat(z[2].prefixed(&zeros_ones(n - 2 - j, j)));
    }
    list = list.concat(z[1].prefixed(&zeros_ones(n / 2, (n - 2) / 2)));
    let mut third = WordList::new();
    for j in 1..=(n - 4) / 2 {
        let pair = WordList::singleton(zeros_ones(n - 1 - j, j + 1))
            .concat(z[1].prefixed(&zeros_ones(n - 1 - j, j)));
        third = third.concat(pair.alternated(j));
    }
    list.concat(third.reversed())
}

/// r = n = 3 mod 4.
fn delta_r3_top(n: usize) -> WordList {
    let mut list = WordList::new();
    for j in 1..=(n - 3) / 2 {
        list = list.concat(WordList::singleton(
            zeros_ones(n - 1 - j, j).concat(&Word::zeros(1)),
        ));
    }
    let mut second = WordList::new();
    for j in 1..=(n - 1) / 2 {
        second = second.concat(WordList::singleton(zeros_ones(n - j, j)));
    }
    list.concat(second.reversed())
}

/// r = 3 mod 4 away from the boundary: interleave the K and L columns.
fn delta_r3_generic(n: usize, r: usize, z: &[WordList]) -> WordList {
    let a = (r - 3) / 2; // even since r = 3 mod 4
    let k_col = |i: usize| z[n - r + 1].prefixed(&zeros_ones(r - 1 - i, i));
    let l_col = |i: usize| z[n - r].prefixed(&zeros_ones(r - i, i));
    let mut list = WordList::new();
    for i in 1..=a + 1 {
        list = list.concat(WordList::singleton(l_col(i).first().unwrap().clone()));
    }
    for i in (1..=a).rev() {
        let block = l_col(i + 1).drop_first().concat(k_col(i));
        list = list.concat(block.alternated(i));
    }
    list.concat(l_col(1).drop_first())
}

/// Debug-build self-check of a diagonal list: adjacency, endpoints and
/// exact element set per the matching construction case.
#[cfg(debug_assertions)]
fn check_delta(n: usize, r: usize, z: &[WordList], list: &WordList) -> bool {
    for pair in list.words().windows(2) {
        assert_eq!(
            pair[0].hamming(&pair[1]),
            Ok(1),
            "delta n={n} r={r} adjacency"
        );
    }
    let diagonal = |rr: usize| -> HashSet<Word> {
        let mut set = HashSet::new();
        for j in 1..=(rr - 1) / 2 {
            for w in z[n - rr].words() {
                set.insert(zeros_ones(rr - j, j).concat(w));
            }
        }
        set
    };
    let mut expected: HashSet<Word> = diagonal(r);
    if r % 4 == 3 && r == n - 1 {
        expected.extend(diagonal(n - 2));
        expected.extend(diagonal(n));
        expected.remove(&zeros_ones(n - 1, 1));
    } else if (r % 4 == 1 && r == n - 1) || (r % 4 == 3 && r == n && n > 3) {
        if r == n - 1 {
            expected.extend(diagonal(n - 2));
            expected.extend(diagonal(n));
        } else {
            expected.extend(diagonal(n - 1));
        }
    } else if r > 3 {
        expected.extend(diagonal(r - 1));
    }
    let got: HashSet<Word> = list.words().iter().cloned().collect();
    assert_eq!(got.len(), list.len(), "delta n={n} r={r} has duplicates");
    assert_eq!(got, expected, "delta n={n} r={r} element set");
    true
}

#[cfg(not(debug_assertions))]
fn check_delta(_n: usize, _r: usize, _z: &[WordList], _list: &WordList) -> bool {
    true
}

/// The recursive 1-Gray code for all of `W^1_n`: the 1-prefixed code
/// for length n-1 followed by the length-n code for words starting
/// with 0. Runs from `1^n` to `(001)^*`.
pub fn gray1_w(n: usize) -> WordList {
    let z = build_z_cache(n);
    let one = Word::ones(1);
    let mut list = WordList::singleton(Word::empty());
    for zm in z.iter().skip(1) {
        list = list.prefixed(&one).concat(zm.clone());
    }
    list
}

/// Verification record for a claimed k-Gray listing.
#[derive(Debug, Clone)]
pub struct GrayReport {
    pub max_distance: usize,
    pub distance_histogram: BTreeMap<usize, usize>,
    pub duplicate_free: bool,
    pub covers_expected: bool,
    pub first: Option<Word>,
    pub last: Option<Word>,
}

impl GrayReport {
    pub fn passes(&self, k: usize) -> bool {
        self.max_distance <= k && self.duplicate_free && self.covers_expected
    }
}

/// Check a listing against the k-Gray definition and an expected
/// element set. Failures are report fields, not errors.
pub fn verify_gray(list: &WordList, k: usize, expected: &HashSet<Word>) -> GrayReport {
    assert!(k >= 1);
    let mut histogram = BTreeMap::new();
    let mut max_distance = 0;
    for pair in list.words().windows(2) {
        let d = pair[0].hamming(&pair[1]).unwrap_or(usize::MAX);
        *histogram.entry(d).or_insert(0) += 1;
        max_distance = max_distance.max(d);
    }
    let set: HashSet<Word> = list.words().iter().cloned().collect();
    let duplicate_free = set.len() == list.len();
    GrayReport {
        max_distance,
        distance_histogram: histogram,
        duplicate_free,
        covers_expected: duplicate_free && &set == expected,
        first: list.first().cloned(),
        last: list.last().cloned(),
    }
}

/// Outcome of the exhaustive 1-Gray search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A Hamiltonian path in the flip graph of `W^q_n`.
    Found(WordList),
    /// The search space was exhausted: no 1-Gray code exists.
    Exhausted,
    /// The node budget ran out before the search finished.
    BudgetExceeded,
}

/// Backtracking search for a 1-Gray code of `W^q_n`, used to
/// reproduce the small-case experimental evidence. `budget` bounds
/// the number of visited search nodes.
pub fn search_gray1(n: usize, q: Q, budget: u64) -> SearchOutcome {
    let words = brute_force_qdecreasing(n, q);
    if words.len() <= 1 {
        return SearchOutcome::Found(WordList::from_words(words));
    }
    let index: std::collections::HashMap<&Word, usize> =
        words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); words.len()];
    for (i, w) in words.iter().enumerate() {
        for bit in 0..n {
            let mut flipped = w.clone();
            flipped.flip(bit);
            if let Some(&j) = index.get(&flipped) {
                adj[i].push(j);
            }
        }
    }

    fn extend(
        adj: &[Vec<usize>],
        parity: &[bool],
        visited: &mut Vec<bool>,
        path: &mut Vec<usize>,
        nodes: &mut u64,
        budget: u64,
    ) -> Option<bool> {
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        if path.len() == adj.len() {
            return Some(true);
        }
        let cur = *path.last().unwrap();
        // prune: the graph is bipartite by weight parity, so the rest
        // of the path alternates classes starting opposite to cur
        let start_parity = !parity[cur];
        let in_start_class = (0..adj.len())
            .filter(|&u| !visited[u] && parity[u] == start_parity)
            .count();
        let remaining = adj.len() - path.len();
        if in_start_class != remaining.div_ceil(2) {
            return Some(false);
        }
        // prune: every unvisited vertex must stay reachable from the
        // path head through unvisited vertices
        let mut reached = vec![false; adj.len()];
        let mut queue = vec![cur];
        reached[cur] = true;
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            for &u in &adj[v] {
                if !visited[u] && !reached[u] {
                    reached[u] = true;
                    seen += 1;
                    queue.push(u);
                }
            }
        }
        if seen + path.len() < adj.len() {
            return Some(false);
        }
        // prune: at most one unvisited vertex may have a single
        // remaining connection (it has to end the path)
        let mut pendant = 0;
        for u in 0..adj.len() {
            if !visited[u] {
                let avail = adj[u].iter().filter(|&&v| !visited[v] || v == cur).count();
                if avail == 0
                    || (avail == 1 && {
                        pendant += 1;
                        pendant > 1
                    })
                {
                    return Some(false);
                }
            }
        }
        // most-constrained first: try neighbors with fewest open moves
        let mut next: Vec<usize> = adj[cur].iter().copied().filter(|&v| !visited[v]).collect();
        next.sort_by_key(|&v| adj[v].iter().filter(|&&u| !visited[u]).count());
        for v in next {
            visited[v] = true;
            path.push(v);
            match extend(adj, parity, visited, path, nodes, budget) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            path.pop();
            visited[v] = false;
        }
        Some(false)
    }

    let parity: Vec<bool> = words.iter().map(|w| w.count_ones() % 2 == 1).collect();
    let mut nodes = 0u64;
    // low-degree vertices are the likeliest path endpoints
    let mut starts: Vec<usize> = (0..words.len()).collect();
    starts.sort_by_key(|&v| adj[v].len());
    for start in starts {
        let mut visited = vec![false; words.len()];
        visited[start] = true;
        let mut path = vec![start];
        match extend(&adj, &parity, &mut visited, &mut path, &mut nodes, budget) {
            Some(true) => {
                let list = path.into_iter().map(|i| words[i].clone()).collect();
                return SearchOutcome::Found(WordList::from_words(list));
            }
            Some(false) => {}
            None => return SearchOutcome::BudgetExceeded,
        }
    }
    SearchOutcome::Exhausted
}
