use super::Presentation;

/// Diagonal entries (absolute values, zeros included) of the Smith form of an
/// integer matrix given as rows.
pub fn smith_diagonal(mut m: Vec<Vec<i128>>, cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // the pivot must divide the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = m[i][j];
                            m[t][j] += v;
                        }
                        continue;
                    }
                }
            }
            // move the smallest remaining entry of row/column t into the pivot
            let mut best = (t, t);
            for i in t..rows {
                if m[i][t] != 0 && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if m[t][j] != 0 && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    while diag.len() < cols {
        diag.push(0);
    }
    diag
}

/// Invariant factors of the abelianization: one `0` per free factor, followed
/// by the torsion coefficients greater than 1 in decreasing order.
pub fn abelianization(p: &Presentation) -> Vec<u64> {
    let cols = p.generators.len();
    let m: Vec<Vec<i128>> = p
        .relators
        .iter()
        .map(|r| (0..cols).map(|g| r.exponent_sum(g) as i128).collect())
        .collect();
    let diag = smith_diagonal(m, cols);
    let mut free: Vec<u64> = diag.iter().filter(|&&d| d == 0).map(|_| 0).collect();
    let mut torsion: Vec<u64> = diag.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
    torsion.sort_unstable_by(|a, b| b.cmp(a));
    free.extend(torsion);
    free
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::builtin;

    fn ab(text: &str) -> Vec<u64> {
        abelianization(&Presentation::parse(text).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(abelianization(&builtin("U3_mod_Brun3").unwrap()), vec![4, 2]);
        assert_eq!(ab("gens: x y"), vec![0, 0]);
        assert_eq!(ab("gens: a\nrel: a^5"), vec![5]);
    }

    #[test]
    fn invariant_factors_divide() {
        // Z/6 ⊕ Z/4 has invariant factors 2 | 12
        assert_eq!(ab("gens: a b\nrel: a^6\nrel: b^4\nrel: [a,b]"), vec![12, 2]);
        assert_eq!(ab("gens: a b c\nrel: a^2 b^4\nrel: a^4 b^2 c^6"), vec![0, 6, 2]);
        assert_eq!(abelianization(&builtin("Q8").unwrap()), vec![2, 2]);
        assert_eq!(abelianization(&builtin("Artin_Bn(4)").unwrap()), vec![0]);
    }

    #[test]
    fn diagonal_of_identity_matrix() {
        assert_eq!(smith_diagonal(vec![vec![1, 0], vec![0, 1]], 2), vec![1, 1]);
        assert_eq!(smith_diagonal(vec![], 2), vec![0, 0]);
    }
}
