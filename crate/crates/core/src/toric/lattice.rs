//! Integer vector helpers: primitive directions, determinants and bases of
//! sublattices.

use num_integer::Integer;

pub type IVec = Vec<i64>;

pub fn sub(a: &[i64], b: &[i64]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn content(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// `v / gcd(v)`; the zero vector is returned unchanged.
pub fn primitive(v: &[i64]) -> IVec {
    let g = content(v);
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

/// Determinant by fraction-free elimination.
pub fn determinant(rows: &[IVec]) -> i64 {
    let n = rows.len();
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    if n == 0 {
        return 1;
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Rank over ℚ.
pub fn rank(rows: &[IVec]) -> usize {
    echelon(rows).len()
}

/// Row echelon basis of the lattice spanned by `rows` (Hermite-style
/// reduction with gcd steps). Pivot entries are positive.
pub fn echelon(rows: &[IVec]) -> Vec<IVec> {
    let Some(width) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut a: Vec<IVec> = rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let mut out = Vec::new();
    for col in 0..width {
        loop {
            let nonzero: Vec<usize> = (0..a.len()).filter(|&i| a[i][col] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let piv = *nonzero.iter().min_by_key(|&&i| a[i][col].abs()).unwrap();
            for &i in &nonzero {
                if i == piv {
                    continue;
                }
                let q = Integer::div_floor(&a[i][col], &a[piv][col]);
                let pr = a[piv].clone();
                for (x, y) in a[i].iter_mut().zip(&pr) {
                    *x -= q * y;
                }
            }
        }
        if let Some(i) = (0..a.len()).find(|&i| a[i][col] != 0) {
            let mut row = a.swap_remove(i);
            if row[col] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(row);
        }
        a.retain(|r| r.iter().any(|&x| x != 0));
    }
    out
}

/// Integer coordinates of `v` in an echelon basis, `None` if `v` is not in
/// the lattice.
pub fn coordinates(basis: &[IVec], v: &[i64]) -> Option<IVec> {
    let mut rest = v.to_vec();
    let mut out = Vec::with_capacity(basis.len());
    for row in basis {
        let piv = row.iter().position(|&x| x != 0)?;
        if rest[piv] % row[piv] != 0 {
            return None;
        }
        let c = rest[piv] / row[piv];
        for (x, y) in rest.iter_mut().zip(row) {
            *x -= c * y;
        }
        out.push(c);
    }
    rest.iter().all(|&x| x == 0).then_some(out)
}

/// Points re-expressed in a basis of the lattice generated by their
/// differences, with the first point at the origin.
pub fn reduce_to_sublattice(points: &[IVec]) -> Vec<IVec> {
    let Some(origin) = points.first() else {
        return Vec::new();
    };
    let diffs: Vec<IVec> = points.iter().map(|p| sub(p, origin)).collect();
    let basis = echelon(&diffs);
    diffs
        .iter()
        .map(|d| coordinates(&basis, d).expect("difference lies in its own lattice"))
        .collect()
}

/// Inverse of a unimodular matrix, `None` unless `|det| = 1`.
pub fn unimodular_inverse(m: &[IVec]) -> Option<Vec<IVec>> {
    let n = m.len();
    let det = determinant(m);
    if det.abs() != 1 {
        return None;
    }
    // Adjugate entries are cofactors; dividing by ±1 keeps them integral.
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<IVec> = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c]).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[i][j] = sign * determinant(&minor) * det;
        }
    }
    Some(inv)
}

pub fn transpose_i(m: &[IVec]) -> Vec<IVec> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

pub fn mat_vec(m: &[IVec], v: &[i64]) -> IVec {
    m.iter().map(|row| dot(row, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_and_det() {
        assert_eq!(primitive(&[4, -6]), vec![2, -3]);
        assert_eq!(primitive(&[0, 0]), vec![0, 0]);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&[vec![2, 1, 0], vec![0, 1, 0], vec![1, 1, 3]]), 6);
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn sublattice_reduction() {
        let pts = vec![vec![0, 0], vec![1, 1], vec![2, 2]];
        assert_eq!(reduce_to_sublattice(&pts), vec![vec![0], vec![1], vec![2]]);
        let b = echelon(&[vec![2, 0], vec![0, 3], vec![4, 6]]);
        assert_eq!(b.len(), 2);
        assert_eq!(determinant(&b).abs(), 6);
        assert_eq!(coordinates(&b, &[1, 0]), None);
        assert!(coordinates(&b, &[2, 3]).is_some());
    }

    #[test]
    fn inverse() {
        let m = vec![vec![0, 1], vec![-1, 0]];
        let inv = unimodular_inverse(&m).unwrap();
        assert_eq!(mat_vec(&inv, &mat_vec(&m, &[3, 5])), vec![3, 5]);
        assert!(unimodular_inverse(&[vec![2, 0], vec![0, 1]]).is_none());
    }
}
