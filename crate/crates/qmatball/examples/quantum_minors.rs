//! q-minors, the two involutions on the generators and the distinguished elements.

use qmatball::sln_minors::{element_t, element_x, embedding_numerator, qminor, star_star, star_x};

fn main() {
    println!("det_q (N=2) = {}", qminor(&[1, 2], &[1, 2]));
    println!("t_12 star (N=2) = {}", star_star(2, 1, 2));
    println!("t_11 * (m=n=1) = {}", star_x(1, 1, 1, 1));
    println!("t (2x2) = {}", element_t(2, 2));
    println!("x (1x1) = {}", element_x(1, 1));
    for a in 1..=2 {
        for al in 1..=2 {
            println!("numerator of z[{a},{al}] (2x2): {}", embedding_numerator(2, 2, a, al));
        }
    }
}
