use super::Partition;

/// A semistandard filling of a Young diagram: rows weakly increase,
/// columns strictly increase, entries in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemistandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl SemistandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Content vector: `weight[k-1]` counts the entries equal to `k`.
    pub fn weight(&self, n: u32) -> Vec<u32> {
        let mut w = vec![0; n as usize];
        for &e in self.rows.iter().flatten() {
            w[e as usize - 1] += 1;
        }
        w
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(&pair[0])
                .all(|(below, above)| below > above)
        });
        rows_ok && cols_ok
    }
}

/// All semistandard tableaux of `shape` with entries in `1..=n`.
pub fn enumerate_ssyt(shape: &Partition, n: u32) -> Vec<SemistandardTableau> {
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, n, &mut rows, shape, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    n: u32,
    rows: &mut Vec<Vec<u32>>,
    shape: &Partition,
    out: &mut Vec<SemistandardTableau>,
) {
    let Some(&(i, j)) = cells.get(k) else {
        out.push(SemistandardTableau { shape: shape.clone(), rows: rows.clone() });
        return;
    };
    let left = if j > 0 { rows[i][j - 1] } else { 1 };
    let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
    for v in left.max(above)..=n {
        rows[i][j] = v;
        fill(cells, k + 1, n, rows, shape, out);
    }
}
