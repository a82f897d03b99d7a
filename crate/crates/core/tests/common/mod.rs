//! Independent oracles. Nothing here calls into the library's combinatorics;
//! they work from raw integers and brute force.

#![allow(dead_code)]

/// `q_a`, `r_a` from raw `(i, j, mult)` triples: summands starting at or
/// before `a`, and summands ending strictly before `a`.
pub fn raw_resolution(n: usize, triples: &[(usize, usize, usize)]) -> (Vec<usize>, Vec<usize>) {
    let q = (1..=n)
        .map(|a| triples.iter().filter(|t| t.1 < a).map(|t| t.2).sum())
        .collect();
    let r = (1..=n)
        .map(|a| triples.iter().filter(|t| t.0 <= a).map(|t| t.2).sum())
        .collect();
    (q, r)
}

/// Every nested chain of subsets `K_1 ⊆ ⋯ ⊆ K_n ⊆ {1..big_n}`, as bitmasks,
/// with `|K_a| = f_a` and `lower_a <= mask_a` bitwise, `mask_a ⊆ {1..upper_a}`.
pub fn brute_chains(big_n: usize, f: &[usize], lower: &[usize], upper: &[usize]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    walk(big_n, f, lower, upper, &mut stack, &mut out);
    out
}

fn walk(big_n: usize, f: &[usize], lower: &[usize], upper: &[usize], stack: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let a = stack.len();
    if a == f.len() {
        out.push(stack.clone());
        return;
    }
    let prev = stack.last().copied().unwrap_or(0);
    let low = (1u32 << lower[a]) - 1;
    let high = (1u32 << upper[a].min(big_n)) - 1;
    for mask in 0u32..(1u32 << big_n) {
        if mask.count_ones() as usize == f[a] && mask & low == low && mask & !high == 0 && mask & prev == prev {
            stack.push(mask);
            walk(big_n, f, lower, upper, stack, out);
            stack.pop();
        }
    }
}

/// Fixed points of `Gr_e(M)`: chains with `{1..q_a} ⊆ K_a ⊆ {1..r_a}` and
/// `|K_a| = e_a + q_a`.
pub fn brute_fixed_points(n: usize, triples: &[(usize, usize, usize)], e: &[usize]) -> Vec<Vec<u32>> {
    let (q, r) = raw_resolution(n, triples);
    let big_n = r[n - 1];
    let f: Vec<usize> = e.iter().zip(&q).map(|(e, q)| e + q).collect();
    if f.iter().zip(&r).any(|(f, r)| f > r) {
        return Vec::new();
    }
    brute_chains(big_n, &f, &q, &r)
}

/// Bitmask chain to sorted 1-based levels.
pub fn levels(chain: &[u32]) -> Vec<Vec<usize>> {
    chain
        .iter()
        .map(|&m| (0..32).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect())
        .collect()
}

pub fn fibonacci(k: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

/// Binary strings of length `n` with no two adjacent ones to which no further
/// one can be added; returned as their numbers of ones, sorted.
pub fn maximal_sparse_strings(n: usize) -> Vec<usize> {
    let ok = |s: u32| s & (s >> 1) == 0;
    let mut ones: Vec<usize> = (0u32..1 << n)
        .filter(|&s| ok(s) && (0..n).all(|b| s >> b & 1 == 1 || !ok(s | 1 << b)))
        .map(|s| s.count_ones() as usize)
        .collect();
    ones.sort_unstable();
    ones
}

/// Rank of an integer matrix by fraction-free Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<i64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let (a, b) = (rows[rank][c], rows[r][c]);
                let pivot = rows[rank].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot) {
                    *x = *x * a - p * b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Hom and Ext between interval modules `[a,b]` and `[c,d]` on the quiver
/// `1 → ⋯ → n`, from the exact sequence
/// `0 → Hom → ⊕_v Hom(X_v, Y_v) → ⊕_{v→v+1} Hom(X_v, Y_{v+1}) → Ext → 0`.
pub fn hom_ext_linear_algebra(n: usize, x: (usize, usize), y: (usize, usize)) -> (usize, usize) {
    let inx = |v: usize| x.0 <= v && v <= x.1;
    let iny = |v: usize| y.0 <= v && v <= y.1;
    // one unknown per vertex where both spaces are nonzero
    let unknowns: Vec<usize> = (1..=n).filter(|&v| inx(v) && iny(v)).collect();
    let col = |v: usize| unknowns.iter().position(|&u| u == v);
    let mut delta = Vec::new();
    for v in 1..n {
        if !(inx(v) && iny(v + 1)) {
            continue;
        }
        // (φ_{v+1} X_{v→v+1} − Y_{v→v+1} φ_v) : X_v → Y_{v+1}
        let mut row = vec![0i64; unknowns.len()];
        if inx(v + 1) {
            if let Some(k) = col(v + 1) {
                row[k] += 1;
            }
        }
        if iny(v) {
            if let Some(k) = col(v) {
                row[k] -= 1;
            }
        }
        delta.push(row);
    }
    let target = delta.len();
    let rk = if unknowns.is_empty() { 0 } else { rank(delta) };
    (unknowns.len() - rk, target - rk)
}

/// `[m]_q! / Π [parts]_q!` via Gaussian binomials from Pascal's rule.
pub fn gaussian_binomial(m: usize, k: usize) -> Vec<u64> {
    if k > m {
        return vec![];
    }
    if k == 0 || k == m {
        return vec![1];
    }
    let a = gaussian_binomial(m - 1, k - 1);
    let b = gaussian_binomial(m - 1, k);
    let mut out = vec![0u64; a.len().max(b.len() + k)];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + k] += c;
    }
    out
}

pub fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Flag-variety polynomial of type `dims` in dimension `m` as a product of
/// Gaussian binomials `[m, d_k] [d_k, d_{k−1}] ⋯`.
pub fn flag_polynomial(m: usize, dims: &[usize]) -> Vec<u64> {
    let mut out = vec![1];
    let mut top = m;
    for &d in dims.iter().rev() {
        out = poly_mul(&out, &gaussian_binomial(top, d));
        top = d;
    }
    out
}

/// Inversion count of a subset chain read as a coset representative: the
/// number of pairs `y < x` with `x` entering strictly before `y`.
pub fn chain_inversions(big_n: usize, chain: &[Vec<usize>]) -> usize {
    let n = chain.len();
    let enter = |x: usize| (0..n).find(|&a| chain[a].contains(&x)).unwrap_or(n);
    let mut count = 0;
    for x in 1..=big_n {
        for y in 1..x {
            if enter(x) < enter(y) {
                count += 1;
            }
        }
    }
    count
}

/// `w_n` for the degenerate flag family in one-line notation: `r ↦ k` for
/// `r = 2k` and `r ↦ n + 1 + k` for `r = 2k + 1`.
pub fn degflag_one_line(n: usize) -> Vec<usize> {
    (1..=2 * n).map(|r| if r % 2 == 0 { r / 2 } else { n + 1 + r / 2 }).collect()
}
