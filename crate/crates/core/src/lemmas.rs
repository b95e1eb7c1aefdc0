//! Randomized checks of four inequalities between standard products.
//!
//! Each suite draws random products, keeps the ones meeting the hypothesis and
//! counts violations of the conclusion.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::monomial::{lex_exps, Monomial, Ring};
use crate::tableau::standard_factorization;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// `w1...wN` standard, `x1^d w1...wN = w'1...w'(N+1)` standard: `w'1 >=lex w1`.
    X1Power,
    /// `u1...uN xn = x1 w1...wN`, both standard: `u1 >=lex w1`.
    XnFirst,
    /// `nu1(ui) <= 1`, `max supp(u1...uN) <= min supp(u(N+1))`, standard
    /// representation `v1...v(N+1)` of `u1...u(N+1)`: `v(N+1) <=lex uN`.
    NPlusOne,
    /// `xn u1...uN = x1 w1...wN`, both standard: `uN >=lex wN`.
    XnLast,
}

impl Lemma {
    pub const ALL: [Lemma; 4] = [Lemma::X1Power, Lemma::XnFirst, Lemma::NPlusOne, Lemma::XnLast];

    pub fn name(&self) -> &'static str {
        match self {
            Lemma::X1Power => "x1-power",
            Lemma::XnFirst => "xn-first",
            Lemma::NPlusOne => "n-plus-one",
            Lemma::XnLast => "xn-last",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: Lemma,
    pub seed: u64,
    /// Cases meeting the hypothesis.
    pub cases: usize,
    /// Draws rejected by the hypothesis filter.
    pub rejected: usize,
    pub violations: usize,
    pub first_violation: Option<String>,
}

impl LemmaReport {
    pub fn ok(&self) -> bool {
        self.violations == 0
    }
}

/// Uniform monomial of degree `degree` in `n` variables (stars and bars).
pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Monomial {
    let slots = degree as usize + n - 1;
    let mut bars: Vec<usize> = sample(rng, slots, n - 1).into_vec();
    bars.sort_unstable();
    let mut exps = Vec::with_capacity(n);
    let mut prev = 0;
    for b in bars {
        exps.push((b - prev) as u32);
        prev = b + 1;
    }
    exps.push((slots - prev) as u32);
    Monomial::new(exps).expect("non-empty")
}

fn ge_lex(a: &Monomial, b: &Monomial) -> bool {
    lex_exps(a.exponents(), b.exponents()).is_ge()
}

fn rows(ms: &[Monomial]) -> String {
    ms.iter().map(Monomial::pretty).collect::<Vec<_>>().join(" * ")
}

struct Shape {
    n: usize,
    d: u32,
    count: usize,
}

fn random_shape<R: Rng>(rng: &mut R) -> Shape {
    Shape {
        n: rng.gen_range(2..=5),
        d: rng.gen_range(2..=4),
        count: rng.gen_range(1..=4),
    }
}

/// `None` when the hypothesis fails; otherwise `Some(Err(msg))` on a violation.
type Case = Option<std::result::Result<(), String>>;

fn x1_power<R: Rng>(rng: &mut R) -> Result<Case> {
    let s = random_shape(rng);
    let product = random_monomial(rng, s.n, s.d * s.count as u32);
    let w = standard_factorization(&product, s.count)?;
    let lifted = product.mul(&Ring::new(s.n).var_power(1, s.d)?)?;
    let w2 = standard_factorization(&lifted, s.count + 1)?;
    Ok(Some(if ge_lex(&w2[0], &w[0]) {
        Ok(())
    } else {
        Err(format!("w = {}, w' = {}", rows(&w), rows(&w2)))
    }))
}

/// `u1...uN` and `w1...wN` with `u1...uN xn = x1 w1...wN`.
fn xn_pair<R: Rng>(rng: &mut R) -> Result<Option<(Vec<Monomial>, Vec<Monomial>)>> {
    let s = random_shape(rng);
    let product = random_monomial(rng, s.n, s.d * s.count as u32);
    let Some(shifted) = product.exchange(s.n, 1) else {
        return Ok(None);
    };
    Ok(Some((
        standard_factorization(&product, s.count)?,
        standard_factorization(&shifted, s.count)?,
    )))
}

fn xn_first<R: Rng>(rng: &mut R) -> Result<Case> {
    Ok(xn_pair(rng)?.map(|(u, w)| {
        if ge_lex(&u[0], &w[0]) {
            Ok(())
        } else {
            Err(format!("u = {}, w = {}", rows(&u), rows(&w)))
        }
    }))
}

fn xn_last<R: Rng>(rng: &mut R) -> Result<Case> {
    Ok(xn_pair(rng)?.map(|(u, w)| {
        if ge_lex(u.last().expect("N >= 1"), w.last().expect("N >= 1")) {
            Ok(())
        } else {
            Err(format!("u = {}, w = {}", rows(&u), rows(&w)))
        }
    }))
}

fn n_plus_one<R: Rng>(rng: &mut R) -> Result<Case> {
    let s = random_shape(rng);
    let split = rng.gen_range(1..=s.n);
    // product in x1..x_split, next factor in x_split..xn
    let head = random_monomial(rng, split, s.d * s.count as u32);
    let mut exps = head.exponents().to_vec();
    exps.resize(s.n, 0);
    let product = Monomial::new(exps)?;
    let tail = random_monomial(rng, s.n - split + 1, s.d);
    let mut exps = vec![0; split - 1];
    exps.extend_from_slice(tail.exponents());
    let next = Monomial::new(exps)?;
    let u = standard_factorization(&product, s.count)?;
    let last = u.last().expect("N >= 1");
    if u.iter().any(|f| f.nu(1) > 1) || product.max_var()? > next.min_var()? || !ge_lex(last, &next) {
        return Ok(None);
    }
    let v = standard_factorization(&product.mul(&next)?, s.count + 1)?;
    Ok(Some(if ge_lex(last, v.last().expect("N + 1 >= 1")) {
        Ok(())
    } else {
        Err(format!("u = {} * {}, v = {}", rows(&u), next.pretty(), rows(&v)))
    }))
}

/// Runs `cases` hypothesis-meeting cases of `lemma`, drawing at most
/// `100 * cases` candidates.
pub fn run_lemma_suite(lemma: Lemma, cases: usize, seed: u64) -> Result<LemmaReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (lemma as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut report = LemmaReport {
        lemma,
        seed,
        cases: 0,
        rejected: 0,
        violations: 0,
        first_violation: None,
    };
    let mut draws = 0;
    while report.cases < cases && draws < cases.saturating_mul(100) {
        draws += 1;
        let case = match lemma {
            Lemma::X1Power => x1_power(&mut rng)?,
            Lemma::XnFirst => xn_first(&mut rng)?,
            Lemma::NPlusOne => n_plus_one(&mut rng)?,
            Lemma::XnLast => xn_last(&mut rng)?,
        };
        match case {
            None => report.rejected += 1,
            Some(outcome) => {
                report.cases += 1;
                if let Err(msg) = outcome {
                    report.violations += 1;
                    report.first_violation.get_or_insert(msg);
                }
            }
        }
    }
    Ok(report)
}

pub fn run_all_lemmas(cases: usize, seed: u64) -> Result<Vec<LemmaReport>> {
    Lemma::ALL.iter().map(|&l| run_lemma_suite(l, cases, seed)).collect()
}
