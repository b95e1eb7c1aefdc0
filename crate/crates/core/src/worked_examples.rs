//! Golden reproductions of the classical worked examples.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lexsegment::{classify, final_lexsegment, LexSegmentIdeal, Verdict};
use crate::monomial::Monomial;
use crate::tableau::{is_standard_product, standard_tableau_from_support, Support};
use crate::toric::{check_l_exchange, TOrder};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl ExampleCheck {
    fn new(name: &str, expected: String, actual: String) -> Self {
        ExampleCheck {
            name: name.to_string(),
            ok: expected == actual,
            expected,
            actual,
        }
    }
}

/// Rows of the standard tableau with the support of the 5 x 3 example, `n = 8`.
pub const TABLEAU_ROWS: [[usize; 3]; 5] = [[1, 6, 7], [1, 6, 8], [2, 5, 6], [3, 4, 4], [3, 4, 5]];

fn m(exps: &[u32]) -> Monomial {
    Monomial::new(exps.to_vec()).expect("non-empty")
}

fn tableau_example() -> Result<ExampleCheck> {
    let entries: Vec<usize> = TABLEAU_ROWS.iter().flatten().copied().collect();
    let support = Support::from_entries(8, &entries)?;
    let tableau = standard_tableau_from_support(&support, 5, 3)?;
    Ok(ExampleCheck::new(
        "standard tableau of a 5x3 support",
        format!("{:?}", TABLEAU_ROWS.map(|r| r.to_vec())),
        format!("{:?}", tableau.rows()),
    ))
}

/// `(T_{x2^3})^2` against `(T_{x1x3x4})^2` in `L^f(x1x3x4)`: the only exchange
/// candidate is `x1 x2^2`, which lies outside the set.
fn squared_pair_example() -> Result<ExampleCheck> {
    let seg = final_lexsegment(m(&[1, 0, 1, 1]))?;
    let (a, b) = (m(&[0, 3, 0, 0]), m(&[1, 0, 1, 1]));
    let u = [a.clone(), a.clone()];
    let v = [b.clone(), b.clone()];
    let candidate = a.exchange(1, 2).expect("x2 divides x2^3");
    let violated = seg.contains(&a)
        && seg.contains(&b)
        && is_standard_product(&u)
        && is_standard_product(&v)
        && a.support() == vec![2]
        && !seg.contains(&candidate);
    Ok(ExampleCheck::new(
        "l-exchange fails on (T[x2^3])^2, (T[x1*x3*x4])^2",
        format!("violated via {}", m(&[1, 2, 0, 0]).pretty()),
        if violated {
            format!("violated via {}", candidate.pretty())
        } else {
            "not violated".into()
        },
    ))
}

fn l_exchange_search_example() -> Result<ExampleCheck> {
    let seg = final_lexsegment(m(&[1, 0, 1, 1]))?;
    let report = check_l_exchange(seg.generators(), 2, TOrder::Lex)?;
    let involved = report.counterexample.as_ref().is_some_and(|ce| {
        let all: Vec<&Monomial> = ce.u_factors.iter().chain(&ce.v_factors).collect();
        all.contains(&&m(&[0, 3, 0, 0])) && all.contains(&&m(&[1, 0, 1, 1]))
    });
    Ok(ExampleCheck::new(
        "l-exchange search on L^f(x1*x3*x4)",
        "fails, counterexample involves x2^3 and x1*x3*x4".into(),
        match (report.satisfied, involved) {
            (true, _) => "satisfied".into(),
            (false, true) => "fails, counterexample involves x2^3 and x1*x3*x4".into(),
            (false, false) => "fails with another counterexample".into(),
        },
    ))
}

fn classification_example(name: &str, u: &[u32], v: &[u32], expected: Verdict) -> Result<ExampleCheck> {
    let ideal = LexSegmentIdeal::new(m(u), m(v))?;
    Ok(ExampleCheck::new(
        name,
        expected.to_string(),
        classify(&ideal)?.verdict.to_string(),
    ))
}

pub fn worked_examples() -> Result<Vec<ExampleCheck>> {
    Ok(vec![
        tableau_example()?,
        squared_pair_example()?,
        l_exchange_search_example()?,
        classification_example(
            "classification of L(x1*x3*x4, x2*x4^2)",
            &[1, 0, 1, 1],
            &[0, 1, 0, 2],
            Verdict::NonCompletely { l: 2 },
        )?,
        classification_example(
            "classification of L(x1*x2, x1*x3)",
            &[1, 1, 0],
            &[1, 0, 1],
            Verdict::CompletelyCaseI { a: 1 },
        )?,
    ])
}
