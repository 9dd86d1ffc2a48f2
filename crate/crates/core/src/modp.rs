//! Arithmetic and linear algebra over a prime field `F_p` with `p < 2^31`.

/// Smallest prime at least `start` that is `≡ 1 (mod modulus)`.
pub fn prime_congruent_one(modulus: u64, start: u64, limit: u64) -> Option<u64> {
    let mut candidate = if start <= 1 { 1 } else { (start - 1) / modulus * modulus + 1 };
    while candidate < start {
        candidate += modulus;
    }
    while candidate < limit {
        if is_prime(candidate) {
            return Some(candidate);
        }
        candidate += modulus;
    }
    None
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(is_prime(p) && p < (1 << 31));
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut result = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        result
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let order = self.p - 1;
        let factors = distinct_prime_factors(order);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, order / q) != 1))
            .unwrap_or(1)
    }

    /// A primitive `n`-th root of unity; requires `n | p - 1`.
    pub fn root_of_unity(&self, n: u64) -> u64 {
        debug_assert_eq!((self.p - 1) % n, 0);
        self.pow(self.primitive_root(), (self.p - 1) / n)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..ncols {
            let Some(found) = (top..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(top, found);
            let scale = self.inv(rows[top][col]);
            for x in rows[top].iter_mut() {
                *x = self.mul(*x, scale);
            }
            for r in 0..rows.len() {
                if r != top && rows[r][col] != 0 {
                    let factor = rows[r][col];
                    for c in col..ncols {
                        let v = self.mul(factor, rows[top][c]);
                        rows[r][c] = self.sub(rows[r][c], v);
                    }
                }
            }
            pivots.push(col);
            top += 1;
            if top == rows.len() {
                break;
            }
        }
        rows.truncate(top);
        pivots
    }

    /// Basis of `{v : M v = 0}` for a matrix given by rows.
    pub fn nullspace(&self, matrix: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
        let mut rows = matrix.to_vec();
        let pivots = self.row_reduce(&mut rows);
        let mut basis = Vec::new();
        for free in (0..ncols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; ncols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = self.neg(rows[r][free]);
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial `det(xI - M)` as coefficients, lowest degree first.
    /// Uses a similarity reduction to upper Hessenberg form.
    pub fn charpoly(&self, matrix: &[Vec<u64>]) -> Vec<u64> {
        let n = matrix.len();
        let mut h: Vec<Vec<u64>> = matrix.to_vec();
        for col in 0..n.saturating_sub(2) {
            let Some(pivot) = (col + 1..n).find(|&r| h[r][col] != 0) else {
                continue;
            };
            if pivot != col + 1 {
                h.swap(pivot, col + 1);
                for row in h.iter_mut() {
                    row.swap(pivot, col + 1);
                }
            }
            let inv = self.inv(h[col + 1][col]);
            for r in col + 2..n {
                let factor = self.mul(h[r][col], inv);
                if factor == 0 {
                    continue;
                }
                // row_r -= factor * row_{col+1}
                for c in 0..n {
                    let v = self.mul(factor, h[col + 1][c]);
                    h[r][c] = self.sub(h[r][c], v);
                }
                // col_{col+1} += factor * col_r
                for row in h.iter_mut() {
                    let v = self.mul(factor, row[r]);
                    row[col + 1] = self.add(row[col + 1], v);
                }
            }
        }

        // polys[m] = charpoly of the leading m×m block
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 0..n {
            // (x - h[m][m]) * polys[m]
            let prev = &polys[m];
            let mut next = vec![0; prev.len() + 1];
            for (i, &c) in prev.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], c);
                next[i] = self.sub(next[i], self.mul(h[m][m], c));
            }
            let mut sub_product = 1;
            for i in (0..m).rev() {
                sub_product = self.mul(sub_product, h[i + 1][i]);
                let coeff = self.mul(sub_product, h[i][m]);
                if coeff != 0 {
                    for (k, &c) in polys[i].iter().enumerate() {
                        next[k] = self.sub(next[k], self.mul(coeff, c));
                    }
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Distinct roots of a polynomial, by exhaustive evaluation.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert_eq!(prime_congruent_one(6, 13, 1 << 31), Some(13));
        assert_eq!(prime_congruent_one(4, 9, 1 << 31), Some(13));
        assert_eq!(prime_congruent_one(60, 121, 1 << 31), Some(181));
        assert!(is_prime(2) && !is_prime(1) && !is_prime(91));
    }

    #[test]
    fn roots_of_unity() {
        let f = PrimeField::new(13);
        let z = f.root_of_unity(6);
        assert_eq!(f.pow(z, 6), 1);
        assert!((1..6).all(|k| f.pow(z, k) != 1));
        assert_eq!(f.mul(f.inv(5), 5), 1);
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let f = PrimeField::new(101);
        // [[2,1,0],[1,3,1],[0,1,4]]: x^3 - 9x^2 + 24x - 18
        let m = vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]];
        let cp = f.charpoly(&m);
        assert_eq!(cp, vec![f.reduce(-18), 24, f.reduce(-9), 1]);
        // needs a pivot swap
        let m = vec![vec![1, 2, 3], vec![0, 4, 5], vec![6, 0, 7]];
        let cp = f.charpoly(&m);
        // det(xI - M) = x^3 - 12x^2 + 21x - 16 (trace, principal minors, determinant)
        assert_eq!(cp, vec![f.reduce(-16), 21, f.reduce(-12), 1]);
    }

    #[test]
    fn nullspace_basis() {
        let f = PrimeField::new(7);
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = f.nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!(f.add(f.add(v[0], f.mul(2, v[1])), f.mul(3, v[2])), 0);
        }
    }
}
