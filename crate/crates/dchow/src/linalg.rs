//! Dense row-echelon computations over F_p.
//!
//! Three storage paths: packed bit rows for p = 2, byte rows with
//! division-free reduction for small odd p, and u32 rows for anything larger.
//! All ranks are exact; the echelon is maintained incrementally so Macaulay
//! ladders can reuse the basis of one degree when building the next.

/// One reduced row plus its pivot column.
#[derive(Clone, Debug)]
pub enum Row {
    Bits(Vec<u64>),
    Bytes(Vec<u8>),
    Words(Vec<u32>),
}

/// Incremental row echelon over F_p with a fixed column count.
pub struct Echelon {
    p: u32,
    ncols: usize,
    /// pivot column -> index into `rows`.
    pivots: Vec<Option<usize>>,
    rows: Vec<Row>,
    pivot_cols: Vec<usize>,
}

const SMALL_PRIME_MAX: u32 = 13;

impl Echelon {
    pub fn new(p: u32, ncols: usize) -> Self {
        Echelon {
            p,
            ncols,
            pivots: vec![None; ncols],
            rows: Vec::new(),
            pivot_cols: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Pivot column of each stored row, in insertion order.
    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    fn pack(&self, dense: &[u32]) -> Row {
        if self.p == 2 {
            let mut words = vec![0u64; self.ncols.div_ceil(64)];
            for (i, &v) in dense.iter().enumerate() {
                if v & 1 == 1 {
                    words[i / 64] |= 1 << (i % 64);
                }
            }
            Row::Bits(words)
        } else if self.p <= SMALL_PRIME_MAX {
            Row::Bytes(dense.iter().map(|&v| (v % self.p) as u8).collect())
        } else {
            Row::Words(dense.iter().map(|&v| v % self.p).collect())
        }
    }

    /// Insert a dense row; returns true when it increased the rank.
    pub fn insert_dense(&mut self, dense: &[u32]) -> bool {
        debug_assert_eq!(dense.len(), self.ncols);
        let row = self.pack(dense);
        self.insert_row(row)
    }

    /// Insert a row already in packed form (must match the field's storage).
    pub fn insert_row(&mut self, mut row: Row) -> bool {
        let mut from = 0usize;
        loop {
            let Some(col) = leading_col_from(&row, from) else {
                return false;
            };
            match self.pivots[col] {
                Some(r) => {
                    let coeff = coeff_at(&row, col);
                    // Both rows lead at `col`; everything to the left is zero,
                    // so the update starts there.
                    subtract_multiple(self.p, &mut row, &self.rows[r], coeff, col);
                    from = col;
                }
                None => {
                    normalize(self.p, &mut row, col);
                    self.pivots[col] = Some(self.rows.len());
                    self.rows.push(row);
                    self.pivot_cols.push(col);
                    return true;
                }
            }
        }
    }
}

fn leading_col_from(row: &Row, from: usize) -> Option<usize> {
    match row {
        Row::Bits(words) => {
            for (w, &word) in words.iter().enumerate().skip(from / 64) {
                if word != 0 {
                    return Some(w * 64 + word.trailing_zeros() as usize);
                }
            }
            None
        }
        Row::Bytes(v) => v[from..].iter().position(|&x| x != 0).map(|i| i + from),
        Row::Words(v) => v[from..].iter().position(|&x| x != 0).map(|i| i + from),
    }
}

fn coeff_at(row: &Row, col: usize) -> u32 {
    match row {
        Row::Bits(_) => 1,
        Row::Bytes(v) => v[col] as u32,
        Row::Words(v) => v[col],
    }
}

/// Make the pivot coefficient 1; entries left of `col` are already zero.
fn normalize(p: u32, row: &mut Row, col: usize) {
    match row {
        Row::Bits(_) => {}
        Row::Bytes(v) => {
            let inv = crate::algebra::FieldElement::new(v[col] as i64, p).inv().value() as u16;
            if inv != 1 {
                let p16 = p as u16;
                for x in v[col..].iter_mut() {
                    *x = ((*x as u16 * inv) % p16) as u8;
                }
            }
        }
        Row::Words(v) => {
            let inv = crate::algebra::FieldElement::new(v[col] as i64, p).inv().value() as u64;
            if inv != 1 {
                let p64 = p as u64;
                for x in v[col..].iter_mut() {
                    *x = (*x as u64 * inv % p64) as u32;
                }
            }
        }
    }
}

/// row -= coeff * pivot, where the pivot row is monic at its pivot column
/// `col` and both rows vanish to the left of it.
fn subtract_multiple(p: u32, row: &mut Row, pivot: &Row, coeff: u32, col: usize) {
    match (row, pivot) {
        (Row::Bits(a), Row::Bits(b)) => {
            for (x, y) in a[col / 64..].iter_mut().zip(&b[col / 64..]) {
                *x ^= y;
            }
        }
        (Row::Bytes(a), Row::Bytes(b)) => {
            // c = (p - coeff) so the update is an addition; values stay below
            // p^2 <= 169, reduced by two conditional subtractions.  This inner
            // loop carries the bulk of the Hilbert-ladder work.
            let c = (p - coeff % p) as u16;
            let p16 = p as u16;
            let p8 = (p16 * 8) as u16;
            let p4 = p16 * 4;
            let p2 = p16 * 2;
            for (x, y) in a[col..].iter_mut().zip(&b[col..]) {
                let mut t = *x as u16 + c * *y as u16;
                if t >= p8 {
                    t -= p8;
                }
                if t >= p4 {
                    t -= p4;
                }
                if t >= p2 {
                    t -= p2;
                }
                if t >= p16 {
                    t -= p16;
                }
                *x = t as u8;
            }
        }
        (Row::Words(a), Row::Words(b)) => {
            let c = (p - coeff % p) as u64;
            let p64 = p as u64;
            for (x, y) in a[col..].iter_mut().zip(&b[col..]) {
                *x = ((*x as u64 + c * *y as u64) % p64) as u32;
            }
        }
        _ => unreachable!("mixed row storage"),
    }
}

/// Push a packed row's columns through a remap table into a wider space:
/// `out[remap[i]] = row[i]`.  Used by the Hilbert ladder to realize
/// multiplication by a variable on monomial bases.
pub fn remap_row(row: &Row, remap: &[usize], out_cols: usize) -> Row {
    match row {
        Row::Bits(words) => {
            let mut out = vec![0u64; out_cols.div_ceil(64)];
            for (i, &to) in remap.iter().enumerate() {
                if words[i / 64] >> (i % 64) & 1 == 1 {
                    out[to / 64] |= 1 << (to % 64);
                }
            }
            Row::Bits(out)
        }
        Row::Bytes(v) => {
            let mut out = vec![0u8; out_cols];
            for (i, &to) in remap.iter().enumerate() {
                out[to] = v[i];
            }
            Row::Bytes(out)
        }
        Row::Words(v) => {
            let mut out = vec![0u32; out_cols];
            for (i, &to) in remap.iter().enumerate() {
                out[to] = v[i];
            }
            Row::Words(out)
        }
    }
}

/// Rank of an explicit dense matrix.
pub fn rank(p: u32, rows: &[Vec<u32>], ncols: usize) -> usize {
    let mut ech = Echelon::new(p, ncols);
    for r in rows {
        ech.insert_dense(r);
    }
    ech.rank()
}

/// Nullity (dimension of the right kernel) of an explicit dense matrix.
pub fn nullity(p: u32, rows: &[Vec<u32>], ncols: usize) -> usize {
    ncols - rank(p, rows, ncols)
}
