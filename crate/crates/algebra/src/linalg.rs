use crate::field::Field;

/// Rank of a dense matrix over GF(p); rows may have any common length.
pub fn rank(mut rows: Vec<Vec<u32>>, f: Field) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = f.inv(rows[r][c]);
        for x in rows[r][c..].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let (top, rest) = rows.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            let k = row[c];
            if k != 0 {
                for (x, &y) in row[c..].iter_mut().zip(&prow[c..]) {
                    *x = f.sub(*x, f.mul(k, y));
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Rank of a sparse matrix given as `(row, col, value)` triples.
pub fn rank_sparse(nrows: usize, ncols: usize, entries: &[(usize, usize, u32)], f: Field) -> usize {
    if nrows == 0 || ncols == 0 {
        return 0;
    }
    let mut rows = vec![vec![0u32; ncols]; nrows];
    for &(i, j, v) in entries {
        rows[i][j] = f.add(rows[i][j], v);
    }
    rank(rows, f)
}
