//! Lexsegment sets `L(u, v)`, shadows, completeness and the linear-resolution
//! classification.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{cmp_lex, lex_next_below, Monomial, Ring};

/// The lexsegment ideal generated by `L(u, v) = { w : u >=lex w >=lex v }`.
///
/// Generators are always kept lex-descending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexSegmentIdeal {
    n: usize,
    d: u32,
    u: Monomial,
    v: Monomial,
    generators: Vec<Monomial>,
}

impl LexSegmentIdeal {
    pub fn new(u: Monomial, v: Monomial) -> Result<Self> {
        u.check_same_ring(&v)?;
        if cmp_lex(&u, &v)?.is_lt() {
            return Err(Error::Order(format!(
                "u = {} is lex-smaller than v = {}",
                u.pretty(),
                v.pretty()
            )));
        }
        let mut generators = vec![u.clone()];
        let mut cur = u.clone();
        while cur != v {
            // cannot run off the end: v is below u in the same degree
            cur = lex_next_below(&cur).expect("v lies below u");
            generators.push(cur.clone());
        }
        Ok(LexSegmentIdeal {
            n: u.n(),
            d: u.degree(),
            u,
            v,
            generators,
        })
    }

    /// `L(x1^d, v)`.
    pub fn initial(v: Monomial) -> Result<Self> {
        let top = v.ring().var_power(1, v.degree())?;
        Self::new(top, v)
    }

    /// `L(u, xn^d)`.
    pub fn final_segment(u: Monomial) -> Result<Self> {
        let bottom = u.ring().var_power(u.n(), u.degree())?;
        Self::new(u, bottom)
    }

    /// All of `M_d`.
    pub fn full(ring: Ring, d: u32) -> Result<Self> {
        Self::new(ring.var_power(1, d)?, ring.var_power(ring.n(), d)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn u(&self) -> &Monomial {
        &self.u
    }

    pub fn v(&self) -> &Monomial {
        &self.v
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, w: &Monomial) -> bool {
        w.n() == self.n
            && w.degree() == self.d
            && cmp_lex(&self.u, w).is_ok_and(|o| o.is_ge())
            && cmp_lex(w, &self.v).is_ok_and(|o| o.is_ge())
    }

    pub fn is_completely_lexsegment(&self, iterations: usize) -> Result<bool> {
        Ok(completeness(self.generators(), iterations)?.complete)
    }

    /// The default shadow budget, `n * d`.
    pub fn default_shadow_iterations(&self) -> usize {
        self.n * self.d as usize
    }
}

/// `L(x1^d, v)`.
pub fn initial_lexsegment(v: Monomial) -> Result<LexSegmentIdeal> {
    LexSegmentIdeal::initial(v)
}

/// `L(v, xn^d)`.
pub fn final_lexsegment(v: Monomial) -> Result<LexSegmentIdeal> {
    LexSegmentIdeal::final_segment(v)
}

fn check_equigenerated(gens: &[Monomial]) -> Result<(usize, u32)> {
    let first = gens.first().ok_or(Error::Empty)?;
    for g in gens {
        first.check_same_ring(g)?;
        if g.degree() != first.degree() {
            return Err(Error::Dimension(format!(
                "generators of degrees {} and {}",
                first.degree(),
                g.degree()
            )));
        }
    }
    Ok((first.n(), first.degree()))
}

/// `{ x_i * w : w in gens }`, deduplicated and lex-descending.
pub fn shadow(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    let (n, _) = check_equigenerated(gens)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in gens {
        for i in 1..=n {
            let m = w.mul_var(i)?;
            if seen.insert(m.clone()) {
                out.push(m);
            }
        }
    }
    out.sort_by(|a, b| crate::monomial::lex_exps(b.exponents(), a.exponents()));
    Ok(out)
}

/// Whether `gens` is exactly `L(max_lex(gens), min_lex(gens))`.
pub fn is_lexsegment_set(gens: &[Monomial]) -> Result<bool> {
    check_equigenerated(gens)?;
    let set: HashSet<&Monomial> = gens.iter().collect();
    let by_lex = |a: &&&Monomial, b: &&&Monomial| crate::monomial::lex_exps(a.exponents(), b.exponents());
    let top = *set.iter().max_by(by_lex).expect("non-empty");
    let bottom = *set.iter().min_by(by_lex).expect("non-empty");
    let mut count = 1;
    let mut cur = top.clone();
    while &cur != bottom {
        cur = lex_next_below(&cur).expect("bottom lies below top");
        if !set.contains(&cur) {
            return Ok(false);
        }
        count += 1;
    }
    Ok(count == set.len())
}

/// Outcome of the bounded shadow test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Completeness {
    /// True if every checked shadow was a lexsegment set.
    pub complete: bool,
    /// Number of shadows examined (equal to the budget when `complete`).
    pub iterations: usize,
    /// First shadow (counted from 1) that failed, if any.
    pub failed_at: Option<usize>,
}

/// Applies `shadow` up to `iterations` times, checking each result.
pub fn completeness(gens: &[Monomial], iterations: usize) -> Result<Completeness> {
    if iterations == 0 {
        return Err(Error::Precondition("shadow budget must be positive".into()));
    }
    if !is_lexsegment_set(gens)? {
        return Err(Error::Precondition("generators are not a lexsegment set".into()));
    }
    let mut cur = gens.to_vec();
    for k in 1..=iterations {
        cur = shadow(&cur)?;
        if !is_lexsegment_set(&cur)? {
            return Ok(Completeness {
                complete: false,
                iterations: k,
                failed_at: Some(k),
            });
        }
    }
    Ok(Completeness {
        complete: true,
        iterations,
        failed_at: None,
    })
}

/// The largest monomial of the same degree that is lex-smaller than `v`.
pub fn lex_predecessor(v: &Monomial) -> Result<Monomial> {
    lex_next_below(v).ok_or_else(|| Error::NoPredecessor(v.pretty()))
}

/// Which linear-resolution criterion applies to a lexsegment ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    /// `u = x1^a x2^(d-a)`, `v = x1^a xn^(d-a)`.
    CompletelyCaseI { a: u32 },
    /// `b1 < a1 - 1`.
    CompletelyCaseII,
    /// `b1 = a1 - 1` and `x1 w / x_max(w) <=lex u` for the lex predecessor `w`
    /// of `v`; `w` is `None` when `v = xn^d`.
    CompletelyCaseIII { w: Option<Monomial> },
    /// `u = x1 x_{l+1}^.. xn^..`, `v = x_l xn^(d-1)` with `2 <= l <= n-1`.
    NonCompletely { l: usize },
    NoLinearResolution,
    /// Not completely lexsegment with `x1 | v`: neither classification applies.
    Unclassified,
}

impl Verdict {
    /// True when the ideal has a linear resolution.
    pub fn is_positive(&self) -> bool {
        matches!(
            self,
            Verdict::CompletelyCaseI { .. }
                | Verdict::CompletelyCaseII
                | Verdict::CompletelyCaseIII { .. }
                | Verdict::NonCompletely { .. }
        )
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::CompletelyCaseI { .. } => "CompletelyCaseI",
            Verdict::CompletelyCaseII => "CompletelyCaseII",
            Verdict::CompletelyCaseIII { .. } => "CompletelyCaseIII",
            Verdict::NonCompletely { .. } => "NonCompletely",
            Verdict::NoLinearResolution => "NoLinearResolution",
            Verdict::Unclassified => "Unclassified",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::CompletelyCaseI { a } => write!(f, "CompletelyCaseI(a={a})"),
            Verdict::CompletelyCaseIII { w: Some(w) } => {
                write!(f, "CompletelyCaseIII(w={})", w.pretty())
            }
            Verdict::NonCompletely { l } => write!(f, "NonCompletely(l={l})"),
            other => f.write_str(other.label()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionClass {
    pub verdict: Verdict,
    /// Completely lexsegment up to `shadow_iterations` shadows.
    pub completely: bool,
    pub shadow_iterations: usize,
}

pub fn classify(ideal: &LexSegmentIdeal) -> Result<ResolutionClass> {
    classify_with_budget(ideal, ideal.default_shadow_iterations().max(1))
}

pub fn classify_with_budget(ideal: &LexSegmentIdeal, iterations: usize) -> Result<ResolutionClass> {
    let (u, v) = (ideal.u(), ideal.v());
    let (n, d) = (ideal.n(), ideal.d());
    let a1 = u.nu(1);
    if a1 == 0 {
        return Err(Error::Precondition(format!(
            "x1 does not divide u = {}",
            u.pretty()
        )));
    }
    let b1 = v.nu(1);
    let completeness = completeness(ideal.generators(), iterations)?;
    let verdict = if completeness.complete {
        if a1 == b1 && tail_is_power(u, 2, d - a1) && tail_is_power(v, n, d - a1) {
            Verdict::CompletelyCaseI { a: a1 }
        } else if b1 + 1 < a1 {
            Verdict::CompletelyCaseII
        } else if b1 + 1 == a1 {
            match lex_next_below(v) {
                None => Verdict::CompletelyCaseIII { w: None },
                Some(w) => {
                    let shifted = w
                        .exchange(1, w.max_var()?)
                        .expect("max variable divides w");
                    if cmp_lex(&shifted, u)?.is_le() {
                        Verdict::CompletelyCaseIII { w: Some(w) }
                    } else {
                        Verdict::NoLinearResolution
                    }
                }
            }
        } else {
            Verdict::NoLinearResolution
        }
    } else if b1 > 0 {
        Verdict::Unclassified
    } else {
        non_completely_shape(u, v, n, d)
    };
    Ok(ResolutionClass {
        verdict,
        completely: completeness.complete,
        shadow_iterations: completeness.iterations,
    })
}

/// `m = x1^nu1(m) * x_var^exp` exactly.
fn tail_is_power(m: &Monomial, var: usize, exp: u32) -> bool {
    if exp == 0 {
        return m.nu(1) == m.degree();
    }
    if var > m.n() {
        return false;
    }
    m.exponents()
        .iter()
        .enumerate()
        .all(|(i, &e)| match i + 1 {
            1 => true,
            k if k == var => e == exp,
            _ => e == 0,
        })
}

fn non_completely_shape(u: &Monomial, v: &Monomial, n: usize, d: u32) -> Verdict {
    if u.nu(1) != 1 {
        return Verdict::NoLinearResolution;
    }
    for l in 2..n {
        let v_shape = v.nu(l) == 1 && v.nu(n) == d - 1 && v.degree() == d;
        let u_shape = (2..=l).all(|i| u.nu(i) == 0);
        if v_shape && u_shape {
            return Verdict::NonCompletely { l };
        }
    }
    Verdict::NoLinearResolution
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn build_small_segment() {
        let l = LexSegmentIdeal::new(m(&[1, 1, 0]), m(&[0, 2, 0])).unwrap();
        assert_eq!(l.generators(), &[m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 2, 0])]);
        let single = LexSegmentIdeal::new(m(&[0, 1, 1]), m(&[0, 1, 1])).unwrap();
        assert_eq!(single.generators(), &[m(&[0, 1, 1])]);
    }

    #[test]
    fn build_rejects_bad_bounds() {
        assert!(matches!(
            LexSegmentIdeal::new(m(&[0, 2, 0]), m(&[1, 1, 0])),
            Err(Error::Order(_))
        ));
        assert!(matches!(
            LexSegmentIdeal::new(m(&[2, 0, 0]), m(&[1, 0, 0])),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            LexSegmentIdeal::new(m(&[2, 0, 0]), m(&[1, 1])),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn segment_membership_used_by_rees_search() {
        let l = LexSegmentIdeal::new(m(&[1, 0, 1, 1]), m(&[0, 1, 0, 2])).unwrap();
        assert!(l.generators().contains(&m(&[0, 1, 1, 1])));
        assert!(l.contains(&m(&[0, 1, 1, 1])));
        assert!(!l.contains(&m(&[1, 1, 0, 1])));
    }

    #[test]
    fn initial_and_final() {
        let f = final_lexsegment(m(&[1, 0, 1, 1])).unwrap();
        assert!(f.contains(&m(&[0, 3, 0, 0])));
        assert_eq!(f.v(), &m(&[0, 0, 0, 3]));
        let all = initial_lexsegment(m(&[0, 0, 3])).unwrap();
        assert_eq!(all.len(), 10);
        let tiny = final_lexsegment(m(&[0, 0, 3])).unwrap();
        assert_eq!(tiny.generators(), &[m(&[0, 0, 3])]);
    }

    #[test]
    fn shadow_examples() {
        let s = shadow(&[m(&[0, 0, 2])]).unwrap();
        assert_eq!(s, vec![m(&[1, 0, 2]), m(&[0, 1, 2]), m(&[0, 0, 3])]);
        let s = shadow(&[m(&[1, 1, 0]), m(&[1, 0, 1])]).unwrap();
        assert_eq!(
            s,
            vec![
                m(&[2, 1, 0]),
                m(&[2, 0, 1]),
                m(&[1, 2, 0]),
                m(&[1, 1, 1]),
                m(&[1, 0, 2])
            ]
        );
        assert_eq!(
            shadow(&Ring::new(3).monomials_of_degree(2)).unwrap(),
            Ring::new(3).monomials_of_degree(3)
        );
        assert!(shadow(&[m(&[1, 0]), m(&[1, 1])]).is_err());
        assert_eq!(shadow(&[]), Err(Error::Empty));
    }

    #[test]
    fn lexsegment_set_detection() {
        assert!(!is_lexsegment_set(&[m(&[2, 0, 0]), m(&[0, 2, 0])]).unwrap());
        assert!(is_lexsegment_set(&[m(&[0, 2, 0])]).unwrap());
        assert!(is_lexsegment_set(&[m(&[1, 0, 1]), m(&[1, 1, 0])]).unwrap());
        assert_eq!(is_lexsegment_set(&[]), Err(Error::Empty));
    }

    #[test]
    fn predecessors() {
        assert_eq!(lex_predecessor(&m(&[0, 1, 0, 2])).unwrap(), m(&[0, 0, 3, 0]));
        assert_eq!(lex_predecessor(&m(&[3, 0, 0])).unwrap(), m(&[2, 1, 0]));
        assert_eq!(lex_predecessor(&m(&[1, 0, 2])).unwrap(), m(&[0, 3, 0]));
        assert!(matches!(
            lex_predecessor(&m(&[0, 0, 3])),
            Err(Error::NoPredecessor(_))
        ));
    }

    #[test]
    fn classification_examples() {
        let i = LexSegmentIdeal::new(m(&[1, 1, 0]), m(&[1, 0, 1])).unwrap();
        assert_eq!(
            classify(&i).unwrap().verdict,
            Verdict::CompletelyCaseI { a: 1 }
        );
        let i = LexSegmentIdeal::new(m(&[1, 0, 1, 1]), m(&[0, 1, 0, 2])).unwrap();
        let c = classify(&i).unwrap();
        assert!(!c.completely);
        assert_eq!(c.verdict, Verdict::NonCompletely { l: 2 });
        let i = LexSegmentIdeal::new(m(&[2, 0, 0]), m(&[0, 0, 2])).unwrap();
        let c = classify(&i).unwrap();
        assert!(c.completely);
        assert_eq!(c.verdict, Verdict::CompletelyCaseII);
    }

    #[test]
    fn classify_requires_x1_in_u() {
        let i = LexSegmentIdeal::new(m(&[0, 2, 0]), m(&[0, 0, 2])).unwrap();
        assert!(matches!(classify(&i), Err(Error::Precondition(_))));
    }

    #[test]
    fn gap_ideal_has_no_linear_resolution() {
        // L(x1^2, x2^2) in three variables: b1 = 0 = a1 - 2 is case (ii), so
        // pick one failing (iii): u = x1 x3, v = x2^2 -> w = x2 x3, x1 w / x3 = x1 x2 > u
        let i = LexSegmentIdeal::new(m(&[1, 0, 1]), m(&[0, 2, 0])).unwrap();
        let c = classify(&i).unwrap();
        assert!(c.completely);
        assert_eq!(c.verdict, Verdict::NoLinearResolution);
    }
}
