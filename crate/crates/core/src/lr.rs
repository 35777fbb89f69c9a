//! Littlewood-Richardson coefficients.
//!
//! `c^gamma_{alpha beta}` counts fillings of the skew shape `gamma / alpha`
//! with `beta_i` copies of the symbol `i` such that symbols weakly increase
//! along rows, strictly increase down columns, and the word read right to
//! left, top to bottom, is a lattice word.
//!
//! Cells are filled in that same reading order, so the lattice condition is
//! enforced on every prefix and prunes the search as early as possible.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use crate::combinatorics::{contains, Partition};
use crate::error::{Error, Result};

/// Exact multiplicity.
pub type Multiplicity = u64;

type Key = (Partition, Partition, Partition);

fn cache() -> &'static RwLock<HashMap<Key, Multiplicity>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, Multiplicity>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `c^gamma_{alpha beta}`, memoized.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<Multiplicity> {
    if gamma.weight() != alpha.weight() + beta.weight() || !contains(gamma, alpha) || !contains(gamma, beta) {
        return Ok(0);
    }
    if beta.is_empty() || alpha == gamma {
        return Ok(1);
    }
    let key = (alpha.clone(), beta.clone(), gamma.clone());
    if let Some(&c) = cache().read().unwrap().get(&key) {
        return Ok(c);
    }
    let c = count_fillings(alpha, beta, gamma)?;
    cache().write().unwrap().insert(key, c);
    Ok(c)
}

struct Filling<'a> {
    alpha: &'a Partition,
    content: &'a [usize],
    /// Skew cells in reading order, as (row, column).
    cells: Vec<(usize, usize)>,
    /// `grid[row][col]` for the skew part; 0 marks a cell of `alpha` or unfilled.
    grid: Vec<Vec<u8>>,
    counts: Vec<usize>,
}

fn count_fillings(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<Multiplicity> {
    let cells = (0..gamma.len())
        .flat_map(|r| (alpha.part(r)..gamma.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut state = Filling {
        alpha,
        content: beta.parts(),
        cells,
        grid: (0..gamma.len()).map(|r| vec![0; gamma.part(r)]).collect(),
        counts: vec![0; beta.len() + 1],
    };
    state.extend(0)
}

impl Filling<'_> {
    fn extend(&mut self, at: usize) -> Result<Multiplicity> {
        if at == self.cells.len() {
            return Ok(1);
        }
        let (r, c) = self.cells[at];
        // Right neighbour was read just before and bounds us from above.
        let upper = match self.grid[r].get(c + 1) {
            Some(&s) if c + 1 >= self.alpha.part(r) => s as usize,
            _ => self.content.len(),
        };
        // Cell above, if it belongs to the skew shape, bounds us from below.
        let lower = if r > 0 && c >= self.alpha.part(r - 1) {
            self.grid[r - 1][c] as usize + 1
        } else {
            1
        };
        let upper = upper.min(r + 1);
        let mut total: Multiplicity = 0;
        for s in lower..=upper {
            if self.counts[s] == self.content[s - 1] {
                continue;
            }
            if s > 1 && self.counts[s] + 1 > self.counts[s - 1] {
                continue;
            }
            self.counts[s] += 1;
            self.grid[r][c] = s as u8;
            let sub = self.extend(at + 1);
            self.grid[r][c] = 0;
            self.counts[s] -= 1;
            total = total.checked_add(sub?).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }
}

/// Partitions with at most `rows` parts that could appear in `alpha (x) beta`,
/// in reverse lexicographic order.
fn candidates(alpha: &Partition, beta: &Partition, rows: usize) -> Vec<Partition> {
    let total = alpha.weight() + beta.weight();
    let extra = beta.weight();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(rows);

    fn go(
        alpha: &Partition,
        beta: &Partition,
        rows: usize,
        extra: usize,
        remaining: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let i = prefix.len();
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()).unwrap());
            return;
        }
        if i == rows {
            return;
        }
        let lo = alpha.part(i).max(beta.part(i));
        let mut hi = prefix.last().copied().unwrap_or(usize::MAX).min(remaining);
        // The first row only receives 1s, at most beta_1 of them.
        hi = hi.min(if i == 0 {
            alpha.part(0) + beta.part(0)
        } else {
            alpha.part(i) + extra
        });
        if hi < lo {
            return;
        }
        for x in (lo..=hi).rev() {
            if x == 0 {
                continue;
            }
            // Remaining rows can hold at most x cells each.
            if remaining - x > x * (rows - i - 1) {
                break;
            }
            prefix.push(x);
            go(alpha, beta, rows, extra, remaining - x, prefix, out);
            prefix.pop();
        }
    }

    go(alpha, beta, rows, extra, total, &mut prefix, &mut out);
    out
}

/// `V_alpha (x) V_beta = sum_gamma c^gamma_{alpha beta} V_gamma` restricted to
/// `gamma` with at most `rows` parts. Terms come in reverse lexicographic
/// order of `gamma`.
pub fn tensor_decompose(alpha: &Partition, beta: &Partition, rows: usize) -> Result<Vec<(Partition, Multiplicity)>> {
    if alpha.len() > rows || beta.len() > rows {
        return Err(Error::InvalidArgument(format!(
            "row bound {rows} is smaller than the number of parts of {alpha} or {beta}"
        )));
    }
    let mut out = Vec::new();
    for gamma in candidates(alpha, beta, rows) {
        let c = lr_coefficient(alpha, beta, &gamma)?;
        if c > 0 {
            out.push((gamma, c));
        }
    }
    Ok(out)
}

/// Expansion of `alpha_1 (x) ... (x) alpha_m` restricted to diagrams inside
/// the `rows x cols` rectangle. Intermediate products are pruned to the
/// rectangle as well, which is exact because every diagram in a product
/// contains each partial product that produced it.
pub fn multi_lr_boxed(factors: &[Partition], rows: usize, cols: usize) -> Result<BTreeMap<Partition, Multiplicity>> {
    let Some((first, rest)) = factors.split_first() else {
        return Err(Error::InvalidArgument("at least one factor is required".into()));
    };
    let mut acc: BTreeMap<Partition, Multiplicity> = BTreeMap::new();
    if first.fits_in_box(rows, cols) {
        acc.insert(first.clone(), 1);
    }
    for factor in rest {
        if !factor.fits_in_box(rows, cols) {
            return Ok(BTreeMap::new());
        }
        let mut next: BTreeMap<Partition, Multiplicity> = BTreeMap::new();
        for (mu, &m) in &acc {
            for (nu, c) in tensor_decompose(mu, factor, rows)? {
                if nu.part(0) > cols {
                    continue;
                }
                let add = m.checked_mul(c).ok_or(Error::Overflow)?;
                let slot = next.entry(nu).or_insert(0);
                *slot = slot.checked_add(add).ok_or(Error::Overflow)?;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Multiplicity of `V_gamma` in `V_{alpha_1} (x) ... (x) V_{alpha_m}`.
pub fn multi_lr(factors: &[Partition], gamma: &Partition) -> Result<Multiplicity> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument("at least one factor is required".into()));
    }
    if factors.len() == 2 {
        return lr_coefficient(&factors[0], &factors[1], gamma);
    }
    let rows = gamma.len().max(1);
    let cols = gamma.part(0);
    Ok(multi_lr_boxed(factors, rows, cols)?.get(gamma).copied().unwrap_or(0))
}

/// `(c^gamma_{alpha beta} != 0, c^{N gamma}_{N alpha, N beta} != 0)`.
pub fn saturation_pair(alpha: &Partition, beta: &Partition, gamma: &Partition, scale: usize) -> Result<(bool, bool)> {
    if scale == 0 {
        return Err(Error::InvalidArgument("scale N must be at least 1".into()));
    }
    let plain = lr_coefficient(alpha, beta, gamma)? != 0;
    let scaled = lr_coefficient(&alpha.scaled(scale), &beta.scaled(scale), &gamma.scaled(scale))? != 0;
    Ok((plain, scaled))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn single_cell_products() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1])).unwrap(), 0);
    }

    #[test]
    fn identity_case() {
        for alpha in Partition::all_in_box(3, 3) {
            assert_eq!(lr_coefficient(&alpha, &Partition::empty(), &alpha).unwrap(), 1);
            assert_eq!(lr_coefficient(&Partition::empty(), &alpha, &alpha).unwrap(), 1);
        }
    }

    #[test]
    fn gates() {
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1, 1, 1])).unwrap(), 0);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])).unwrap(), 0);
    }

    #[test]
    fn classic_multiplicity_two() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(
            tensor_decompose(&p(&[1]), &p(&[1]), 2).unwrap(),
            vec![(p(&[2]), 1), (p(&[1, 1]), 1)]
        );
        assert_eq!(tensor_decompose(&p(&[1]), &p(&[1]), 1).unwrap(), vec![(p(&[2]), 1)]);
        assert!(tensor_decompose(&p(&[1, 1]), &p(&[1]), 1).is_err());
    }

    #[test]
    fn multi_examples() {
        let a = p(&[2, 1]);
        assert_eq!(multi_lr(std::slice::from_ref(&a), &a).unwrap(), 1);
        assert_eq!(multi_lr(std::slice::from_ref(&a), &p(&[3])).unwrap(), 0);
        let one = p(&[1]);
        let cube = [one.clone(), one.clone(), one.clone()];
        assert_eq!(multi_lr(&cube, &p(&[3])).unwrap(), 1);
        assert_eq!(multi_lr(&cube, &p(&[2, 1])).unwrap(), 2);
        assert_eq!(multi_lr(&cube, &p(&[1, 1, 1])).unwrap(), 1);
        assert!(multi_lr(&[], &a).is_err());
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(saturation_pair(&p(&[1]), &p(&[1]), &p(&[2]), 2).unwrap(), (true, true));
        assert_eq!(
            saturation_pair(&p(&[1]), &p(&[1]), &p(&[3]), 5).unwrap(),
            (false, false)
        );
        assert_eq!(
            saturation_pair(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1]), 3).unwrap(),
            (true, true)
        );
        assert!(saturation_pair(&p(&[1]), &p(&[1]), &p(&[2]), 0).is_err());
    }

    #[test]
    fn weight_gate_on_nonzero() {
        let all = Partition::all_in_box(3, 3);
        for a in &all {
            for b in &all {
                for (g, c) in tensor_decompose(a, b, 3).unwrap() {
                    assert!(c > 0);
                    assert_eq!(g.weight(), a.weight() + b.weight());
                    assert!(contains(&g, a) && contains(&g, b));
                }
            }
        }
    }

    // Independent oracle from the bialternant formula: in k variables,
    // s_alpha * a_{beta + delta} = sum_gamma c^gamma_{alpha beta} a_{gamma + delta},
    // so c is the coefficient of x^{gamma + delta} in s_alpha * a_{beta + delta}.
    // s_alpha is expanded by enumerating semistandard tableaux.
    fn schur_monomials(alpha: &Partition, k: usize) -> HashMap<Vec<usize>, i64> {
        fn fill(shape: &[usize], k: usize, t: &mut Vec<Vec<usize>>, cell: usize, out: &mut HashMap<Vec<usize>, i64>) {
            let total: usize = shape.iter().sum();
            if cell == total {
                let mut exp = vec![0; k];
                t.iter().flatten().for_each(|&e| exp[e - 1] += 1);
                *out.entry(exp).or_insert(0) += 1;
                return;
            }
            let (mut r, mut c) = (0, cell);
            while c >= shape[r] {
                c -= shape[r];
                r += 1;
            }
            let lo_left = if c > 0 { t[r][c - 1] } else { 1 };
            let lo_up = if r > 0 { t[r - 1][c] + 1 } else { 1 };
            for e in lo_left.max(lo_up)..=k {
                t[r].push(e);
                fill(shape, k, t, cell + 1, out);
                t[r].pop();
            }
        }
        let mut out = HashMap::new();
        if alpha.len() > k {
            return out;
        }
        let mut t = vec![Vec::new(); alpha.len()];
        fill(alpha.parts(), k, &mut t, 0, &mut out);
        out
    }

    fn oracle_lr(alpha: &Partition, beta: &Partition, gamma: &Partition) -> i64 {
        use itertools::Itertools;
        let k = gamma.len().max(1);
        if beta.len() > k || alpha.len() > k {
            return 0;
        }
        let shifted = |l: &Partition| -> Vec<usize> { (0..k).map(|i| l.part(i) + k - 1 - i).collect() };
        let target = shifted(gamma);
        let bd = shifted(beta);
        let s = schur_monomials(alpha, k);
        let mut total = 0;
        for perm in (0..k).permutations(k) {
            let inversions = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            // monomial of a_{beta+delta} term: x_{perm[i]}^{bd[i]}
            let mut need = target.clone();
            let mut ok = true;
            for i in 0..k {
                if need[perm[i]] < bd[i] {
                    ok = false;
                    break;
                }
                need[perm[i]] -= bd[i];
            }
            if ok {
                total += sign * s.get(&need).copied().unwrap_or(0);
            }
        }
        total
    }

    fn partitions_of(w: usize) -> Vec<Partition> {
        Partition::all_in_box(w, w)
            .into_iter()
            .filter(|l| l.weight() == w)
            .collect()
    }

    fn conjugate(l: &Partition) -> Partition {
        p(&(0..l.part(0))
            .map(|c| l.parts().iter().filter(|&&x| x > c).count())
            .collect::<Vec<_>>())
    }

    #[test]
    fn agrees_with_bialternant_oracle() {
        for w in 0..=7 {
            for gamma in partitions_of(w) {
                for wa in 0..=w {
                    for alpha in partitions_of(wa) {
                        for beta in partitions_of(w - wa) {
                            let c = lr_coefficient(&alpha, &beta, &gamma).unwrap();
                            assert_eq!(c as i64, oracle_lr(&alpha, &beta, &gamma), "{alpha} {beta} {gamma}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn swap_and_conjugation_symmetry() {
        for w in 0..=8 {
            for gamma in partitions_of(w) {
                for wa in 0..=w {
                    for alpha in partitions_of(wa) {
                        for beta in partitions_of(w - wa) {
                            let c = lr_coefficient(&alpha, &beta, &gamma).unwrap();
                            assert_eq!(c, lr_coefficient(&beta, &alpha, &gamma).unwrap());
                            assert_eq!(
                                c,
                                lr_coefficient(&conjugate(&alpha), &conjugate(&beta), &conjugate(&gamma)).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_square_of_21_in_three_rows() {
        let got = tensor_decompose(&p(&[2, 1]), &p(&[2, 1]), 3).unwrap();
        assert_eq!(
            got,
            vec![
                (p(&[4, 2]), 1),
                (p(&[4, 1, 1]), 1),
                (p(&[3, 3]), 1),
                (p(&[3, 2, 1]), 2),
                (p(&[2, 2, 2]), 1),
            ]
        );
        // Without the row bound two more shapes appear.
        let unbounded = tensor_decompose(&p(&[2, 1]), &p(&[2, 1]), 6).unwrap();
        assert_eq!(unbounded.len(), 7);
        assert_eq!(unbounded.iter().map(|(_, c)| c).sum::<u64>(), 8);
    }

    #[test]
    fn multi_lr_is_associative() {
        let shapes = [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])];
        for a in &shapes {
            for b in &shapes {
                for c in &shapes {
                    let w = a.weight() + b.weight() + c.weight();
                    for g in partitions_of(w) {
                        let via_ab: u64 = tensor_decompose(a, b, w)
                            .unwrap()
                            .iter()
                            .map(|(h, m)| m * lr_coefficient(h, c, &g).unwrap())
                            .sum();
                        let via_bc: u64 = tensor_decompose(b, c, w)
                            .unwrap()
                            .iter()
                            .map(|(h, m)| m * lr_coefficient(a, h, &g).unwrap())
                            .sum();
                        let direct = multi_lr(&[a.clone(), b.clone(), c.clone()], &g).unwrap();
                        assert_eq!(direct, via_ab);
                        assert_eq!(direct, via_bc);
                    }
                }
            }
        }
    }

    #[test]
    fn saturation_holds_on_small_shapes() {
        let all = Partition::all_in_box(3, 3);
        for a in &all {
            for b in &all {
                for (g, _) in tensor_decompose(a, b, 3).unwrap() {
                    assert_eq!(saturation_pair(a, b, &g, 3).unwrap(), (true, true));
                }
            }
        }
    }

    fn weyl_dimension(l: &Partition, k: usize) -> u128 {
        let (mut num, mut den) = (1u128, 1u128);
        for i in 0..k {
            for j in i + 1..k {
                num *= (l.part(i) + j - l.part(j) - i) as u128;
                den *= (j - i) as u128;
            }
        }
        num / den
    }

    fn small_partition() -> impl proptest::strategy::Strategy<Value = Partition> {
        use proptest::prelude::*;
        proptest::collection::vec(0usize..4, 0..4).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest::proptest! {
        #[test]
        fn prop_symmetric_and_gated(a in small_partition(), b in small_partition(), g in small_partition()) {
            let c = lr_coefficient(&a, &b, &g).unwrap();
            proptest::prop_assert_eq!(c, lr_coefficient(&b, &a, &g).unwrap());
            if c > 0 {
                proptest::prop_assert_eq!(g.weight(), a.weight() + b.weight());
                proptest::prop_assert!(g.contains(&a) && g.contains(&b));
            }
        }

        #[test]
        fn prop_gl_dimensions_multiply(a in small_partition(), b in small_partition(), extra in 0usize..2) {
            // dim V_a * dim V_b = sum_g c^g_ab dim V_g as GL_k representations.
            let k = (a.len() + b.len()).max(1) + extra;
            let lhs = weyl_dimension(&a, k) * weyl_dimension(&b, k);
            let rhs: u128 = tensor_decompose(&a, &b, k)
                .unwrap()
                .iter()
                .map(|(g, c)| *c as u128 * weyl_dimension(g, k))
                .sum();
            proptest::prop_assert_eq!(lhs, rhs);
        }
    }
}
