//! Tableaux, standard tableaux and standard representations of products of
//! monomials of one degree.
//!
//! A row `(a1 <= ... <= ad)` stands for the monomial `x_{a1} ... x_{ad}` and the
//! variable `T_a`. Rows are listed lex-descending as monomials, which is
//! ascending as index tuples.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexsegment::LexSegmentIdeal;
use crate::monomial::Monomial;

/// An `N x d` matrix of variable numbers with weakly increasing rows, the rows
/// weakly decreasing as monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let d = rows
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidTableau("no rows".into()))?;
        if d == 0 {
            return Err(Error::InvalidTableau("empty rows".into()));
        }
        for row in &rows {
            validate_row(n, d, row)?;
        }
        for pair in rows.windows(2) {
            if pair[0] > pair[1] {
                return Err(Error::InvalidTableau(format!(
                    "row {:?} is lex-smaller than the row {:?} below it",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(Tableau { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn support(&self) -> Support {
        let mut counts = vec![0usize; self.n];
        for &a in self.rows.iter().flatten() {
            counts[a - 1] += 1;
        }
        Support { counts }
    }

    pub fn row_monomials(&self) -> Vec<Monomial> {
        self.rows
            .iter()
            .map(|r| Monomial::from_row(self.n, r).expect("validated row"))
            .collect()
    }

    pub fn is_standard(&self) -> bool {
        is_standard_rows(&self.rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|a| a.to_string()).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

fn validate_row(n: usize, d: usize, row: &[usize]) -> Result<()> {
    if row.len() != d {
        return Err(Error::InvalidTableau(format!(
            "row {row:?} has length {}, expected {d}",
            row.len()
        )));
    }
    if let Some(bad) = row.iter().find(|&&a| a == 0 || a > n) {
        return Err(Error::InvalidTableau(format!(
            "entry {bad} outside 1..={n}"
        )));
    }
    if row.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidTableau(format!(
            "row {row:?} is not weakly increasing"
        )));
    }
    Ok(())
}

/// Multiset of variable numbers, stored as counts per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Support {
    counts: Vec<usize>,
}

impl Support {
    /// From a list of entries in `1..=n`, in any order.
    pub fn from_entries(n: usize, entries: &[usize]) -> Result<Self> {
        let mut counts = vec![0usize; n];
        for &a in entries {
            if a == 0 || a > n {
                return Err(Error::Dimension(format!("entry {a} outside 1..={n}")));
            }
            counts[a - 1] += 1;
        }
        Ok(Support { counts })
    }

    pub fn of_monomial(m: &Monomial) -> Self {
        Support {
            counts: m.exponents().iter().map(|&e| e as usize).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.counts.len()
    }

    pub fn len(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Entries in ascending order.
    pub fn sorted_entries(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        for (i, &c) in self.counts.iter().enumerate() {
            out.extend(std::iter::repeat_n(i + 1, c));
        }
        out
    }
}

/// Whether `T_a T_b` is a standard quadratic monomial, with `a` the upper row:
/// `a = b`, or at the first position `i` where they differ `a_i < b_i` and every
/// later entry of `b` is at most every later entry of `a`.
pub fn is_standard_pair(a: &[usize], b: &[usize]) -> Result<bool> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::InvalidTableau(format!(
            "rows {a:?} and {b:?} must be non-empty and of equal length"
        )));
    }
    for row in [a, b] {
        if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidTableau(format!(
                "row {row:?} is not a weakly increasing list of variable numbers"
            )));
        }
    }
    Ok(standard_pair_unchecked(a, b))
}

pub(crate) fn standard_pair_unchecked(a: &[usize], b: &[usize]) -> bool {
    let Some(i) = a.iter().zip(b).position(|(x, y)| x != y) else {
        return true;
    };
    if a[i] > b[i] {
        return false;
    }
    i + 1 == a.len() || b[b.len() - 1] <= a[i + 1]
}

fn is_standard_rows(rows: &[Vec<usize>]) -> bool {
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if !standard_pair_unchecked(&rows[i], &rows[j]) {
                return false;
            }
        }
    }
    true
}

/// Whether every pair of rows of `tableau` is standard.
pub fn is_standard(tableau: &Tableau) -> bool {
    tableau.is_standard()
}

/// The unique standard `N x d` tableau with the given support.
///
/// The `N` smallest entries form the first column; the first column splits into
/// blocks of equal values, and the blocks are processed bottom to top, each one
/// taking the smallest remaining entries and filling its sub-tableau by the same
/// procedure.
pub fn standard_tableau_from_support(support: &Support, height: usize, width: usize) -> Result<Tableau> {
    if height == 0 || width == 0 {
        return Err(Error::Precondition("tableau must have at least one row and column".into()));
    }
    if support.len() != height * width {
        return Err(Error::Dimension(format!(
            "support of size {} does not fill a {height} x {width} tableau",
            support.len()
        )));
    }
    let entries = support.sorted_entries();
    let rows = fill_standard(&entries, height, width);
    let tableau = Tableau::new(support.n(), rows)?;
    if tableau.is_standard() && &tableau.support() == support {
        return Ok(tableau);
    }
    log::error!(
        "block construction produced a non-standard tableau for support {:?}; \
         falling back to exhaustive search",
        support.sorted_entries()
    );
    brute_force_standard(support, height, width)
}

fn fill_standard(entries: &[usize], height: usize, width: usize) -> Vec<Vec<usize>> {
    let mut rows: Vec<Vec<usize>> = vec![Vec::with_capacity(width); height];
    if width == 0 {
        return rows;
    }
    let (column, mut rest) = entries.split_at(height);
    for (row, &a) in rows.iter_mut().zip(column) {
        row.push(a);
    }
    if width == 1 {
        return rows;
    }
    let mut blocks = Vec::new();
    let mut start = 0;
    while start < height {
        let end = start + column[start..].iter().take_while(|&&a| a == column[start]).count();
        blocks.push(start..end);
        start = end;
    }
    for block in blocks.into_iter().rev() {
        let take = block.len() * (width - 1);
        let (mine, remaining) = rest.split_at(take);
        rest = remaining;
        let sub = fill_standard(mine, block.len(), width - 1);
        for (row, tail) in rows[block].iter_mut().zip(sub) {
            row.extend(tail);
        }
    }
    rows
}

/// Every tableau with the given support and shape, in no particular order.
pub fn all_tableaux(support: &Support, height: usize, width: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    if support.len() != height * width || height == 0 || width == 0 {
        return out;
    }
    let mut counts = support.counts().to_vec();
    let mut rows = Vec::with_capacity(height);
    collect_tableaux(&mut counts, width, height, &mut rows, &mut out, support.n());
    out
}

fn collect_tableaux(
    counts: &mut [usize],
    width: usize,
    left: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
    n: usize,
) {
    if left == 0 {
        out.push(Tableau {
            n,
            rows: rows.clone(),
        });
        return;
    }
    let mut row = Vec::with_capacity(width);
    let lower = rows.last().cloned();
    choose_rows(counts, width, 1, &mut row, lower.as_deref(), &mut |counts, row| {
        rows.push(row.to_vec());
        collect_tableaux(counts, width, left - 1, rows, out, n);
        rows.pop();
    });
}

fn choose_rows(
    counts: &mut [usize],
    width: usize,
    min_entry: usize,
    row: &mut Vec<usize>,
    floor: Option<&[usize]>,
    visit: &mut dyn FnMut(&mut [usize], &[usize]),
) {
    if row.len() == width {
        if floor.is_none_or(|f| f <= row.as_slice()) {
            visit(counts, row);
        }
        return;
    }
    for a in min_entry..=counts.len() {
        if counts[a - 1] == 0 {
            continue;
        }
        counts[a - 1] -= 1;
        row.push(a);
        choose_rows(counts, width, a, row, floor, visit);
        row.pop();
        counts[a - 1] += 1;
    }
}

/// Exhaustive search for the tableau whose `T`-monomial is lex-minimal.
pub fn brute_force_standard(support: &Support, height: usize, width: usize) -> Result<Tableau> {
    all_tableaux(support, height, width)
        .into_iter()
        // T_A <lex T_B compares rows top-down with T_a > T_b iff a < b as tuples
        .max_by(|a, b| a.rows.cmp(&b.rows))
        .ok_or_else(|| Error::Dimension("no tableau with this support and shape".into()))
}

/// The standard factorization of `factors[0] * ... * factors[N-1]`,
/// lex-descending.
pub fn standard_representation(factors: &[Monomial]) -> Result<Vec<Monomial>> {
    let first = factors.first().ok_or(Error::Empty)?;
    for f in factors {
        first.check_same_ring(f)?;
        if f.degree() != first.degree() {
            return Err(Error::Dimension(format!(
                "factors of degrees {} and {}",
                first.degree(),
                f.degree()
            )));
        }
    }
    if first.degree() == 0 {
        return Err(Error::Precondition("factors of degree zero".into()));
    }
    let product = Monomial::product(factors)?;
    standard_factorization(&product, factors.len())
}

/// Splits a monomial of degree `N * d` into its standard product of `N`
/// monomials of degree `d`.
pub fn standard_factorization(product: &Monomial, count: usize) -> Result<Vec<Monomial>> {
    if count == 0 || !(product.degree() as usize).is_multiple_of(count) {
        return Err(Error::Dimension(format!(
            "degree {} is not a multiple of {count}",
            product.degree()
        )));
    }
    let width = product.degree() as usize / count;
    let tableau = standard_tableau_from_support(&Support::of_monomial(product), count, width)?;
    Ok(tableau.row_monomials())
}

/// Whether the standard representation of a product of members of `segment`
/// again has all its factors in `segment`.
pub fn segment_closure_check(segment: &LexSegmentIdeal, factors: &[Monomial]) -> Result<bool> {
    Ok(standard_representation(factors)?
        .iter()
        .all(|w| segment.contains(w)))
}

/// Whether the product `factors` (in any order) is already standard.
pub fn is_standard_product(factors: &[Monomial]) -> bool {
    let mut rows: Vec<Vec<usize>> = factors.iter().map(Monomial::to_row).collect();
    rows.sort();
    is_standard_rows(&rows)
}
