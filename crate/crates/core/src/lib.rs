//! Lexsegment ideals: linear-resolution classification, standard tableaux,
//! toric and Rees-algebra Gröbner bases, and linear quotients of powers.

pub mod error;
pub mod lemmas;
pub mod lexsegment;
pub mod monomial;
pub mod quotients;
pub mod sweep;
pub mod tableau;
pub mod toric;
pub mod worked_examples;

pub use error::{Error, Result};
pub use lexsegment::{classify, classify_with_budget, final_lexsegment, initial_lexsegment, LexSegmentIdeal, ResolutionClass, Verdict};
pub use monomial::{Monomial, MonomialOrder, Ring};
pub use quotients::{
    exchange_implies_power_quotients_suite, has_linear_quotients, power_generators, search_linear_quotient_order,
    verify_power_linear_quotients, OrderSearch, OrderedGenerators, QuotientCertificate, Witness,
};
pub use tableau::{standard_representation, standard_tableau_from_support, Support, Tableau};
pub use toric::{
    check_l_exchange, check_sigma_exchange, koszul_certificate, lexsegment_algebra_gb, normal_form, rees_gb,
    verify_groebner, ExchangeReport, MixedMonomial, ProductOrder, TOrder, ToricBinomial,
};
