//! The `Q̃` family: `Q̃_i = c_i`, the pair formula
//! `Q̃_{i,j} = Q̃_i Q̃_j + 2 Σ_{p=1}^{j} (-1)^p Q̃_{i+p} Q̃_{j-p}`, and the
//! odd/even length recurrences for longer partitions.

use std::sync::LazyLock;

use crate::algebra::CPolynomial;
use crate::error::Result;
use crate::parallel::Memo;
use crate::partition::Partition;
use crate::rings::LagrangianRing;

pub use crate::expansion::QExpansion;

static QTILDE: LazyLock<Memo<Vec<u32>, CPolynomial>> = LazyLock::new(Memo::new);

/// `Q̃_μ` as a universal polynomial in `c_1, c_2, …`. Repeated parts are allowed.
pub fn qtilde(mu: &Partition) -> CPolynomial {
    qtilde_parts(mu.parts())
}

/// `Q̃_{i,j}` for `i ≥ j ≥ 0`, with `Q̃_0 = 1`.
pub fn qtilde_pair(i: u32, j: u32) -> CPolynomial {
    assert!(i >= j, "Q̃_{{i,j}} needs i ≥ j");
    let c = CPolynomial::c;
    let mut out = &c(i) * &c(j);
    for p in 1..=j {
        let term = (&c(i + p) * &c(j - p)).scale(&2.into());
        if p % 2 == 1 {
            out -= &term;
        } else {
            out += &term;
        }
    }
    out
}

fn qtilde_parts(parts: &[u32]) -> CPolynomial {
    match parts {
        [] => CPolynomial::one(),
        [i] => CPolynomial::c(*i),
        [i, j] => qtilde_pair(*i, *j),
        _ => QTILDE.get_or_insert_with(&parts.to_vec(), || {
            let l = parts.len();
            let mut out = CPolynomial::zero();
            if l % 2 == 1 {
                for p in 0..l {
                    let rest = remove_positions(parts, &[p]);
                    let term = &CPolynomial::c(parts[p]) * &qtilde_parts(&rest);
                    if p % 2 == 0 {
                        out += &term;
                    } else {
                        out -= &term;
                    }
                }
            } else {
                // p runs over 2..=l in 1-based positions; sign (-1)^p.
                for p in 1..l {
                    let rest = remove_positions(parts, &[0, p]);
                    let term = &qtilde_pair(parts[0], parts[p]) * &qtilde_parts(&rest);
                    if p % 2 == 1 {
                        out += &term;
                    } else {
                        out -= &term;
                    }
                }
            }
            out
        }),
    }
}

/// Drops exactly the entries at the given positions; the rest stays decreasing.
fn remove_positions(parts: &[u32], positions: &[usize]) -> Vec<u32> {
    parts
        .iter()
        .enumerate()
        .filter(|(i, _)| !positions.contains(i))
        .map(|(_, &v)| v)
        .collect()
}

/// Expansion of `p` in the `Q̃` basis of `H*(LG(n))`.
pub fn qtilde_expand(p: &CPolynomial, n: u32) -> Result<QExpansion> {
    LagrangianRing::shared(n).reduce(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn low_degree_values() {
        assert_eq!(qtilde(&p(&[1, 1])).to_string(), "c1^2 - 2*c2");
        assert_eq!(qtilde(&p(&[2, 1])).to_string(), "c1*c2 - 2*c3");
        for i in 1..=6 {
            assert_eq!(qtilde(&p(&[i])), CPolynomial::c(i));
        }
        assert_eq!(qtilde(&Partition::empty()), CPolynomial::one());
    }

    #[test]
    fn pair_with_zero_is_single() {
        for i in 0..=6 {
            assert_eq!(qtilde_pair(i, 0), CPolynomial::c(i));
        }
    }

    #[test]
    fn three_parts_follow_the_odd_recurrence() {
        // Q̃_{321} = c3 Q̃_{21} - c2 Q̃_{31} + c1 Q̃_{32}
        let c = CPolynomial::c;
        let expected = &(&(&c(3) * &qtilde_pair(2, 1)) - &(&c(2) * &qtilde_pair(3, 1))) + &(&c(1) * &qtilde_pair(3, 2));
        assert_eq!(qtilde(&p(&[3, 2, 1])), expected);
    }

    #[test]
    fn four_parts_follow_the_even_recurrence() {
        let mu = p(&[4, 3, 2, 1]);
        let expected = &(&(&qtilde_pair(4, 3) * &qtilde_pair(2, 1)) - &(&qtilde_pair(4, 2) * &qtilde_pair(3, 1)))
            + &(&qtilde_pair(4, 1) * &qtilde_pair(3, 2));
        assert_eq!(qtilde(&mu), expected);
    }

    #[test]
    fn degree_and_support() {
        for d in 0..=10 {
            for mu in enumerate_partitions(d, None, None) {
                let q = qtilde(&mu);
                assert_eq!(q.homogeneous_degree().unwrap(), Some(d), "Q̃{mu}");
                assert_eq!(q.single_family().unwrap().is_some(), d > 0);
            }
        }
    }

    #[test]
    fn diagonal_pairs_are_nonzero() {
        for i in 1..=4 {
            assert!(!qtilde(&p(&[i, i])).is_zero());
        }
    }
}
