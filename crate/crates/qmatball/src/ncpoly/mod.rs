//! Noncommutative polynomials over the ground field, length-2 rewrite
//! systems, normal forms and graded basis enumeration.

mod json;
mod poly;
mod presentation;
mod solve;
mod symbol;

pub use json::{poly_from_json, poly_from_json_str, poly_to_json, rule_from_json, rule_to_json, word_from_json, word_to_json, JsonError};
pub use poly::NCPoly;
pub use presentation::{Counts, NcError, Presentation, Rule, Strategy, WordOrder};
pub use solve::orient_relations;
pub use symbol::{word_h0_degree, word_string, word_weight, Kind, Sym, Word};
