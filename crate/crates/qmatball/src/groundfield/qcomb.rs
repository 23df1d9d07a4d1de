use super::scalar::Scalar;

/// `(k)_{q²}! = ∏_{j=1..k} (1 − q^{2j}) / (1 − q²)`.
pub fn q_factorial(k: u32) -> Scalar {
    let one = Scalar::one();
    let base = &one - &Scalar::q_pow(2);
    let mut acc = Scalar::one();
    for j in 1..=k as i64 {
        acc *= &((&one - &Scalar::q_pow(2 * j)) / &base);
    }
    acc
}

/// Coefficients `1/(k)_{q²}!` of the q-exponential `exp_{q²}(u)` for `k = 0..=order`.
pub fn q_exp_truncated(order: u32) -> Vec<Scalar> {
    (0..=order).map(|k| q_factorial(k).inv().expect("q-factorials are nonzero")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        assert!(q_factorial(0).is_one());
        assert!(q_factorial(1).is_one());
        assert_eq!(q_factorial(2), Scalar::one() + Scalar::q_pow(2));
    }

    #[test]
    fn factorial_times_power_is_product() {
        for k in 0..6u32 {
            let base = Scalar::one() - Scalar::q_pow(2);
            let lhs = q_factorial(k) * base.pow(k as i64);
            let mut rhs = Scalar::one();
            for j in 1..=k as i64 {
                rhs *= &(Scalar::one() - Scalar::q_pow(2 * j));
            }
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exponential_coefficients() {
        let c = q_exp_truncated(2);
        assert_eq!(c.len(), 3);
        assert!(c[0].is_one() && c[1].is_one());
        assert_eq!(c[2], (Scalar::one() + Scalar::q_pow(2)).inv().unwrap());
        assert_eq!(q_exp_truncated(0), vec![Scalar::one()]);
    }
}
