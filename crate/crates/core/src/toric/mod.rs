//! Presentation ideals of Veronese-type and lexsegment toric rings and of Rees
//! algebras, built from binomials in the variables `x1..xn` and `T_w`.
//!
//! A `T`-variable is identified with the degree-`d` monomial `w` it maps to.
//! `T`-variables are ranked like their monomials: `T_a > T_b` iff `a >lex b`.

mod exchange;
mod rees;

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexsegment::LexSegmentIdeal;
use crate::monomial::{lex_exps, Monomial, Ring};
use crate::tableau::{standard_factorization, standard_pair_unchecked};

pub use exchange::{
    check_l_exchange, check_sigma_exchange, standard_monomials, ExchangeAttempt,
    ExchangeCounterexample, ExchangeKind, ExchangeReport, StandardMonomial,
};
pub use rees::{
    check_groebner, koszul_certificate, rees_gb, rees_linear_relations, verify_groebner,
    GroebnerCheck, ProductOrder, ReesBasis, REDUCTION_BUDGET,
};

/// Monomial orders on the ring of `T`-variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum TOrder {
    /// Lex with `T_a > T_b` iff `a >lex b`.
    #[default]
    #[serde(rename = "lex")]
    Lex,
    /// Degree reverse lex with the same ranking of variables.
    #[serde(rename = "degrevlex")]
    DegRevLex,
    /// Lex with the ranking reversed: `T_a > T_b` iff `a <lex b`.
    #[serde(rename = "lex-reversed")]
    LexReversed,
}

impl TOrder {
    pub fn name(&self) -> &'static str {
        match self {
            TOrder::Lex => "lex",
            TOrder::DegRevLex => "degrevlex",
            TOrder::LexReversed => "lex-reversed",
        }
    }

    /// Compares exponent vectors indexed by `T`-variables listed from the
    /// lex-largest monomial down.
    pub fn compare_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TOrder::Lex => lex_exps(a, b),
            TOrder::DegRevLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
                        match x.cmp(y) {
                            Ordering::Equal => continue,
                            other => return other.reverse(),
                        }
                    }
                    Ordering::Equal
                })
            }
            TOrder::LexReversed => {
                for (x, y) in a.iter().rev().zip(b.iter().rev()) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl std::str::FromStr for TOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(TOrder::Lex),
            "degrevlex" => Ok(TOrder::DegRevLex),
            "lex-reversed" => Ok(TOrder::LexReversed),
            other => Err(Error::Parse(format!(
                "unknown T-order {other:?} (expected lex, degrevlex or lex-reversed)"
            ))),
        }
    }
}

/// `m * T_{w1} ... T_{wN}` with `m` a monomial in the `x`-variables. The
/// `T`-part is kept lex-descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MixedMonomial {
    pub x: Monomial,
    pub t: Vec<Monomial>,
}

impl MixedMonomial {
    pub fn new(x: Monomial, mut t: Vec<Monomial>) -> Self {
        sort_lex_descending(&mut t);
        MixedMonomial { x, t }
    }

    pub fn pure_t(ring: Ring, t: Vec<Monomial>) -> Self {
        Self::new(ring.one(), t)
    }

    /// `(deg x, number of T-factors)`.
    pub fn bidegree(&self) -> (u32, usize) {
        (self.x.degree(), self.t.len())
    }

    /// Image under `x_i -> x_i`, `T_w -> w t`: the `x`-monomial and the power of `t`.
    pub fn image(&self) -> Result<(Monomial, usize)> {
        let mut acc = self.x.clone();
        for w in &self.t {
            acc = acc.mul(w)?;
        }
        Ok((acc, self.t.len()))
    }

    pub fn pretty(&self) -> String {
        let mut parts = Vec::new();
        if self.x.degree() > 0 || self.t.is_empty() {
            parts.push(self.x.pretty());
        }
        for w in &self.t {
            parts.push(format!("T[{}]", w.pretty()));
        }
        parts.join("*")
    }
}

pub(crate) fn sort_lex_descending(ms: &mut [Monomial]) {
    ms.sort_by(|a, b| lex_exps(b.exponents(), a.exponents()));
}

/// `lead - tail`, with `lead` the leading term under the order it was built for.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ToricBinomial {
    pub lead: MixedMonomial,
    pub tail: MixedMonomial,
}

impl ToricBinomial {
    pub fn new(lead: MixedMonomial, tail: MixedMonomial) -> Self {
        ToricBinomial { lead, tail }
    }

    pub fn bidegree(&self) -> (u32, usize) {
        self.lead.bidegree()
    }

    /// Both sides have the same image in the Rees algebra.
    pub fn in_kernel(&self) -> bool {
        match (self.lead.image(), self.tail.image()) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    pub fn pretty(&self) -> String {
        format!("{} - {}", self.lead.pretty(), self.tail.pretty())
    }

    /// JSON shape `{xlead, tlead: [rows], xtail, ttail: [rows], bidegree}`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows = |t: &[Monomial]| t.iter().map(Monomial::to_row).collect::<Vec<_>>();
        serde_json::json!({
            "xlead": self.lead.x.to_string(),
            "tlead": rows(&self.lead.t),
            "xtail": self.tail.x.to_string(),
            "ttail": rows(&self.tail.t),
            "bidegree": [self.lead.x.degree(), self.lead.t.len()],
        })
    }
}

/// All `T_q T_r - T_a T_b` with `q >= r` in `gens`, `T_q T_r` not standard and
/// `T_a T_b` the standard monomial of the same support.
fn quadratic_gb(ring: Ring, gens: &[Monomial]) -> Result<Vec<ToricBinomial>> {
    let mut sorted = gens.to_vec();
    sort_lex_descending(&mut sorted);
    let rows: Vec<Vec<usize>> = sorted.iter().map(Monomial::to_row).collect();
    let mut out = Vec::new();
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            if standard_pair_unchecked(&rows[i], &rows[j]) {
                continue;
            }
            let product = sorted[i].mul(&sorted[j])?;
            let tail = standard_factorization(&product, 2)?;
            out.push(ToricBinomial::new(
                MixedMonomial::pure_t(ring, vec![sorted[i].clone(), sorted[j].clone()]),
                MixedMonomial::pure_t(ring, tail),
            ));
        }
    }
    Ok(out)
}

/// Quadratic Gröbner basis of the presentation ideal of the Veronese ring `K[M_d]`.
pub fn veronese_gb(n: usize, d: u32) -> Result<Vec<ToricBinomial>> {
    if n == 0 {
        return Err(Error::Precondition("need at least one variable".into()));
    }
    let ring = Ring::new(n);
    quadratic_gb(ring, &ring.monomials_of_degree(d))
}

/// Quadratic Gröbner basis of the presentation ideal of `K[L(u, v)]`.
pub fn lexsegment_algebra_gb(ideal: &LexSegmentIdeal) -> Result<Vec<ToricBinomial>> {
    quadratic_gb(ideal.u().ring(), ideal.generators())
}

/// Rewrites non-standard quadratic sub-products of `t` with the quadratic
/// binomials of `gb` until none applies. Returns the factors lex-descending.
pub fn normal_form(t: &[Monomial], gb: &[ToricBinomial]) -> Vec<Monomial> {
    let rules: HashMap<(&Monomial, &Monomial), &[Monomial]> = gb
        .iter()
        .filter(|g| g.lead.x.degree() == 0 && g.lead.t.len() == 2)
        .map(|g| ((&g.lead.t[0], &g.lead.t[1]), g.tail.t.as_slice()))
        .collect();
    let mut cur = t.to_vec();
    sort_lex_descending(&mut cur);
    'rewrite: loop {
        for i in 0..cur.len() {
            for j in i + 1..cur.len() {
                if let Some(tail) = rules.get(&(&cur[i], &cur[j])) {
                    let (a, b) = (tail[0].clone(), tail[1].clone());
                    cur[i] = a;
                    cur[j] = b;
                    sort_lex_descending(&mut cur);
                    continue 'rewrite;
                }
            }
        }
        return cur;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn veronese_two_variables_quadrics() {
        let gb = veronese_gb(2, 2).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0].lead.t, vec![m(&[2, 0]), m(&[0, 2])]);
        assert_eq!(gb[0].tail.t, vec![m(&[1, 1]), m(&[1, 1])]);
        assert!(gb[0].in_kernel());
        assert!(veronese_gb(1, 3).unwrap().is_empty());
    }

    #[test]
    fn lexsegment_gb_edge_cases() {
        let full = LexSegmentIdeal::full(Ring::new(3), 2).unwrap();
        assert_eq!(lexsegment_algebra_gb(&full).unwrap(), veronese_gb(3, 2).unwrap());
        let single = LexSegmentIdeal::new(m(&[1, 1, 0]), m(&[1, 1, 0])).unwrap();
        assert!(lexsegment_algebra_gb(&single).unwrap().is_empty());
        let seg = LexSegmentIdeal::new(m(&[1, 0, 1, 1]), m(&[0, 1, 0, 2])).unwrap();
        for g in lexsegment_algebra_gb(&seg).unwrap() {
            assert!(g.in_kernel());
            assert_eq!(g.lead.image().unwrap().0.degree(), 6);
        }
    }

    #[test]
    fn normal_form_rewrites() {
        let gb = veronese_gb(2, 2).unwrap();
        assert_eq!(
            normal_form(&[m(&[0, 2]), m(&[2, 0])], &gb),
            vec![m(&[1, 1]), m(&[1, 1])]
        );
        let standard = vec![m(&[2, 0]), m(&[1, 1])];
        assert_eq!(normal_form(&standard, &gb), standard);
    }

    #[test]
    fn t_orders() {
        // variables listed T_1 > T_2 > T_3
        let a = [1, 0, 1];
        let b = [0, 2, 0];
        assert_eq!(TOrder::Lex.compare_exps(&a, &b), Ordering::Greater);
        assert_eq!(TOrder::DegRevLex.compare_exps(&a, &b), Ordering::Less);
        assert_eq!(TOrder::LexReversed.compare_exps(&a, &b), Ordering::Greater);
        assert_eq!(TOrder::LexReversed.compare_exps(&[1, 1, 0], &[2, 0, 0]), Ordering::Greater);
        for o in [TOrder::Lex, TOrder::DegRevLex, TOrder::LexReversed] {
            assert_eq!(o.name().parse::<TOrder>().unwrap(), o);
        }
    }

    #[test]
    fn binomial_json_shape() {
        let gb = veronese_gb(2, 2).unwrap();
        let v = gb[0].to_json();
        assert_eq!(v["tlead"], serde_json::json!([[1, 1], [2, 2]]));
        assert_eq!(v["ttail"], serde_json::json!([[1, 2], [1, 2]]));
        assert_eq!(v["xlead"], "0,0");
        assert_eq!(v["bidegree"], serde_json::json!([0, 2]));
    }
}
