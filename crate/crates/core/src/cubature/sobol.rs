//! 32-bit Sobol sequence (Joe–Kuo direction numbers) in Gray-code order.

/// Dimensions with direction numbers.
pub const SOBOL_MAX_DIM: usize = 12;

/// `(degree s, coefficients a, initial m₁..m_s)` of dimensions 2..=12.
const PRIMITIVE: [(u32, u32, &[u32]); SOBOL_MAX_DIM - 1] = [
    (1, 0, &[1]),
    (2, 1, &[1, 3]),
    (3, 1, &[1, 3, 1]),
    (3, 2, &[1, 1, 1]),
    (4, 1, &[1, 1, 3, 3]),
    (4, 4, &[1, 3, 5, 13]),
    (5, 2, &[1, 1, 5, 5, 17]),
    (5, 4, &[1, 1, 5, 5, 5]),
    (5, 7, &[1, 1, 7, 11, 19]),
    (5, 11, &[1, 1, 5, 1, 1]),
    (5, 13, &[1, 1, 1, 3, 11]),
];

const BITS: usize = 32;

fn directions(dim: usize) -> [u32; BITS] {
    let mut v = [0u32; BITS];
    if dim == 0 {
        for (j, vj) in v.iter_mut().enumerate() {
            *vj = 1 << (31 - j);
        }
        return v;
    }
    let (s, a, m) = PRIMITIVE[dim - 1];
    let s = s as usize;
    for j in 0..s {
        v[j] = m[j] << (31 - j);
    }
    for j in s..BITS {
        let mut x = v[j - s] ^ (v[j - s] >> s);
        for i in 1..s {
            if (a >> (s - 1 - i)) & 1 == 1 {
                x ^= v[j - i];
            }
        }
        v[j] = x;
    }
    v
}

/// Point generator; `next` yields the integer coordinates of successive
/// points, starting with the origin.
#[derive(Debug, Clone)]
pub struct Sobol {
    v: Vec<[u32; BITS]>,
    x: Vec<u32>,
    index: u64,
}

impl Sobol {
    /// Panics if `dim` is zero or above [`SOBOL_MAX_DIM`].
    pub fn new(dim: usize) -> Self {
        assert!((1..=SOBOL_MAX_DIM).contains(&dim), "Sobol dimension {dim} out of range");
        Sobol { v: (0..dim).map(directions).collect(), x: vec![0; dim], index: 0 }
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    /// Current point, then advances by one Gray-code step.
    pub fn next_point(&mut self) -> &[u32] {
        if self.index > 0 {
            let c = (self.index - 1).trailing_ones() as usize;
            for (x, v) in self.x.iter_mut().zip(&self.v) {
                *x ^= v[c];
            }
        }
        self.index += 1;
        &self.x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_points() {
        let mut s = Sobol::new(3);
        let pts: Vec<Vec<u32>> = (0..4).map(|_| s.next_point().to_vec()).collect();
        let half = 1u32 << 31;
        assert_eq!(pts[0], vec![0, 0, 0]);
        assert_eq!(pts[1], vec![half, half, half]);
        assert_eq!(pts[2][0], 3 * (half >> 1));
        assert_eq!(pts[2][1], half >> 1);
    }

    #[test]
    fn stratified_in_each_coordinate() {
        // The first 2^m points hit every dyadic interval of length 2^−m once.
        let m = 8;
        for d in 1..=SOBOL_MAX_DIM {
            let mut s = Sobol::new(d);
            let mut seen = vec![vec![false; 1 << m]; d];
            for _ in 0..(1u32 << m) {
                for (j, &x) in s.next_point().iter().enumerate() {
                    seen[j][(x >> (32 - m)) as usize] = true;
                }
            }
            assert!(seen.iter().all(|c| c.iter().all(|&b| b)), "dim {d}");
        }
    }
}
