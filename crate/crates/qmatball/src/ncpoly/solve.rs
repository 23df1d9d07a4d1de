use super::poly::NCPoly;
use super::presentation::{Rule, WordOrder};
use super::symbol::Word;
use crate::groundfield::Scalar;
use crate::linalg::Mat;

/// Turn a family of relations (`p = 0`) into oriented rules.
///
/// The relations are row-reduced with words sorted from largest to smallest;
/// every pivot word of length 2 becomes a left pattern rewritten into the
/// remaining (smaller) words of its row. Pivot words of other lengths are
/// returned as residual relations, together with the rules.
pub fn orient_relations(order: &WordOrder, relations: &[NCPoly]) -> (Vec<Rule>, Vec<NCPoly>) {
    let mut words: Vec<Word> = Vec::new();
    for r in relations {
        for (w, _) in r.terms() {
            if !words.contains(w) {
                words.push(w.clone());
            }
        }
    }
    words.sort_by(|a, b| order.cmp(b, a));
    let mut m: Mat<Scalar> = Mat::zeros(relations.len(), words.len());
    for (i, r) in relations.iter().enumerate() {
        for (w, c) in r.terms() {
            let j = words.iter().position(|x| x == w).unwrap();
            m.set(i, j, c.clone());
        }
    }
    let pivots = m.rref();
    let mut rules = Vec::new();
    let mut residual = Vec::new();
    for (row, &pc) in pivots.iter().enumerate() {
        let mut rhs = NCPoly::zero();
        for (j, w) in words.iter().enumerate().skip(pc + 1) {
            let c = m.get(row, j);
            if !c.is_zero() {
                rhs.add_term(w.clone(), -c);
            }
        }
        let w = &words[pc];
        if w.len() == 2 {
            rules.push(Rule { lhs: [w[0], w[1]], rhs });
        } else {
            let mut rel = NCPoly::word(w.clone());
            rel.add_scaled(&rhs, &Scalar::from_int(-1));
            residual.push(rel);
        }
    }
    (rules, residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::Sym;

    #[test]
    fn self_referential_square_is_solved() {
        // dz dz = -q^{-2} dz dz  =>  dz dz -> 0
        let x = Sym::dz(1, 1);
        let order = WordOrder::new(&[x]);
        let rel = NCPoly::from_syms(Scalar::one() + Scalar::q_pow(-2), &[x, x]);
        let (rules, residual) = orient_relations(&order, &[rel]);
        assert!(residual.is_empty());
        assert_eq!(rules.len(), 1);
        assert!(rules[0].rhs.is_zero());
    }

    #[test]
    fn orients_towards_smaller_words() {
        let x = Sym::z(1, 1);
        let y = Sym::z(1, 2);
        let order = WordOrder::new(&[x, y]);
        // x y - q y x = 0
        let mut rel = NCPoly::from_syms(Scalar::one(), &[x, y]);
        rel.add_term([y, x].into_iter().collect(), -Scalar::q());
        let (rules, _) = orient_relations(&order, &[rel]);
        assert_eq!(rules[0].lhs, [y, x]);
        assert_eq!(rules[0].rhs, NCPoly::from_syms(Scalar::q_pow(-1), &[x, y]));
    }
}
