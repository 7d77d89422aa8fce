use super::poly::CPolynomial;

/// The ring operations needed by [`determinant`].
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Ring for CPolynomial {
    fn zero() -> Self {
        CPolynomial::zero()
    }

    fn one() -> Self {
        CPolynomial::one()
    }

    fn is_zero(&self) -> bool {
        CPolynomial::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Division-free determinant by Laplace expansion over column subsets:
/// `D[S]` is the minor on the first `|S|` rows and the columns in `S`.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    assert!(n <= 20, "determinant too large for subset expansion");
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return R::one();
    }
    let mut minors: Vec<Option<R>> = vec![None; 1 << n];
    minors[0] = Some(R::one());
    for set in 1usize..(1 << n) {
        let row = set.count_ones() as usize - 1;
        let mut acc = R::zero();
        let mut any = false;
        for col in 0..n {
            if set & (1 << col) == 0 || m[row][col].is_zero() {
                continue;
            }
            let Some(rest) = &minors[set & !(1 << col)] else {
                continue;
            };
            let above = (set >> (col + 1)).count_ones();
            let term = m[row][col].mul(rest);
            acc = if above % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            any = true;
        }
        if any && !acc.is_zero() {
            minors[set] = Some(acc);
        }
    }
    minors[(1 << n) - 1].take().unwrap_or_else(R::zero)
}
