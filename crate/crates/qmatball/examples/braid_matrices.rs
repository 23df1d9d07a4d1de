//! Hecke and braid identities for the braid matrices, and invertibility of the barred ones.

use qmatball::rmatrix::{rhat, verify_rhat_properties, Tag};

fn main() {
    for tag in [Tag::UU, Tag::VV] {
        for d in 1..=3 {
            let r = verify_rhat_properties(&rhat(tag, d));
            println!("{tag:?} d={d}: hecke {:?} braid {:?}", r.hecke, r.braid);
        }
    }
    for tag in [Tag::BarUU, Tag::BarVV] {
        for d in 1..=4 {
            let r = verify_rhat_properties(&rhat(tag, d));
            println!("{tag:?} d={d}: invertible {:?}", r.invertible);
        }
    }
    let r = rhat(Tag::UU, 2);
    println!("R_UU entry (2,1) over (1,2): {}", r.entry((2, 1), (1, 2)).pretty());
}
