//! Dense linear algebra over GF(2).
//!
//! Rows are bit-packed into `u64` words and elimination works a word at a
//! time. Every matrix carries its row/column labels so principal submatrices
//! can be taken by vertex label.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A square matrix over GF(2) with labelled rows and columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    labels: Vec<String>,
    stride: usize,
    bits: Vec<u64>,
}

impl Gf2Matrix {
    /// The `n x n` zero matrix over the given labels.
    pub fn zeros<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_distinct(&labels)?;
        let stride = words_for(labels.len());
        Ok(Gf2Matrix {
            bits: vec![0; stride * labels.len()],
            stride,
            labels,
        })
    }

    /// Zero matrix labelled `1..=n`.
    pub fn zeros_numbered(n: usize) -> Self {
        Self::zeros((1..=n).map(|i| i.to_string())).expect("numbered labels are distinct")
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros_numbered(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// The empty `0 x 0` matrix.
    pub fn empty() -> Self {
        Self::zeros_numbered(0)
    }

    /// Builds a matrix from rows of 0/1 entries. Any nonzero entry counts as 1.
    pub fn from_rows<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        rows: &[Vec<u8>],
    ) -> Result<Self> {
        let mut m = Self::zeros(labels)?;
        let n = m.n();
        if rows.len() != n {
            return Err(Error::Format(format!(
                "expected {n} rows, got {}",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Format(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x != 0);
            }
        }
        Ok(m)
    }

    /// Like [`Gf2Matrix::from_rows`] with labels `1..=n`.
    pub fn from_rows_numbered(rows: &[Vec<u8>]) -> Result<Self> {
        Self::from_rows((1..=rows.len()).map(|i| i.to_string()), rows)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.n() && j < self.n(),
            "index ({i}, {j}) out of range"
        );
        (self.bits[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(
            i < self.n() && j < self.n(),
            "index ({i}, {j}) out of range"
        );
        let w = &mut self.bits[i * self.stride + j / WORD];
        if value {
            *w |= 1 << (j % WORD);
        } else {
            *w &= !(1 << (j % WORD));
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.n())
            .map(|i| (0..self.n()).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n()).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        let mut rows = self.bits.clone();
        rank_in_place(&mut rows, self.stride, self.n())
    }

    /// Dimension of the kernel over GF(2): `n - rank`.
    pub fn nullity(&self) -> usize {
        self.n() - self.rank()
    }

    /// Principal submatrix on the rows/columns whose labels are in `keep`,
    /// in the matrix's own label order.
    pub fn principal_submatrix<S: AsRef<str>>(&self, keep: &[S]) -> Result<Self> {
        let mut flags = vec![false; self.n()];
        for k in keep {
            let i = self
                .index_of(k.as_ref())
                .ok_or_else(|| Error::UnknownLabel(k.as_ref().to_string()))?;
            flags[i] = true;
        }
        let idx: Vec<usize> = (0..self.n()).filter(|&i| flags[i]).collect();
        Ok(self.principal_by_index(&idx))
    }

    /// Principal submatrix on the given (ascending) row indices.
    pub fn principal_by_index(&self, idx: &[usize]) -> Self {
        let labels = idx.iter().map(|&i| self.labels[i].clone());
        let mut out = Self::zeros(labels).expect("labels of a submatrix are distinct");
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                if self.get(i, j) {
                    out.set(a, b, true);
                }
            }
        }
        out
    }

    /// Copy with the diagonal entry at `label` replaced.
    pub fn set_diagonal(&self, label: &str, value: bool) -> Result<Self> {
        let i = self
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        let mut out = self.clone();
        out.set(i, i, value);
        Ok(out)
    }

    /// Nullity of the principal submatrix selected by `mask` (bit `i` keeps
    /// row/column `i`). Only defined for `n <= 64`.
    pub fn principal_nullity_mask(&self, mask: u64) -> usize {
        assert!(self.n() <= WORD, "mask nullity needs n <= 64");
        if self.n() == 0 {
            return 0;
        }
        let mut rows = [0u64; WORD];
        let mut k = 0;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            rows[k] = self.bits[i] & mask;
            k += 1;
            m &= m - 1;
        }
        k - rank_single_word(&mut rows[..k])
    }

    /// Nullity of the principal submatrix selected by `mask` after the
    /// diagonal entries in `diag_toggle` are flipped. Only for `n <= 64`.
    pub fn principal_nullity_mask_toggled(&self, mask: u64, diag_toggle: u64) -> usize {
        assert!(self.n() <= WORD, "mask nullity needs n <= 64");
        let mut rows = [0u64; WORD];
        let mut k = 0;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            rows[k] = (self.bits[i] ^ (diag_toggle & (1 << i))) & mask;
            k += 1;
            m &= m - 1;
        }
        k - rank_single_word(&mut rows[..k])
    }

    /// Parses the matrix text format: an optional `labels: a b c` line, a
    /// line holding `n`, then `n` rows of space-separated 0/1 digits. Blank
    /// lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels: Option<(usize, Vec<String>)> = None;
        let mut n: Option<usize> = None;
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("labels:") {
                if labels.is_some() || !rows.is_empty() {
                    return Err(Error::parse(lineno, "unexpected labels line"));
                }
                labels = Some((
                    lineno,
                    rest.split_whitespace().map(str::to_string).collect(),
                ));
                continue;
            }
            match n {
                None => {
                    n = Some(line.parse().map_err(|_| {
                        Error::parse(lineno, format!("expected matrix size, got `{line}`"))
                    })?);
                }
                Some(n) => {
                    let row = line
                        .split_whitespace()
                        .map(|t| match t {
                            "0" => Ok(0u8),
                            "1" => Ok(1u8),
                            _ => Err(Error::parse(lineno, format!("entry `{t}` is not 0 or 1"))),
                        })
                        .collect::<Result<Vec<u8>>>()?;
                    if row.len() != n {
                        return Err(Error::parse(
                            lineno,
                            format!("row has {} entries, expected {n}", row.len()),
                        ));
                    }
                    if rows.len() == n {
                        return Err(Error::parse(lineno, "too many rows"));
                    }
                    rows.push(row);
                }
            }
        }
        let n = n.ok_or_else(|| Error::parse(1, "missing matrix size"))?;
        if rows.len() != n {
            return Err(Error::parse(
                text.lines().count(),
                format!("expected {n} rows, got {}", rows.len()),
            ));
        }
        match labels {
            Some((lineno, labels)) => {
                if labels.len() != n {
                    return Err(Error::parse(
                        lineno,
                        format!("{} labels for a {n}x{n} matrix", labels.len()),
                    ));
                }
                Self::from_rows(labels, &rows).map_err(|e| Error::parse(lineno, e.to_string()))
            }
            None => Self::from_rows_numbered(&rows),
        }
    }
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

fn check_distinct(labels: &[String]) -> Result<()> {
    let mut seen = std::collections::HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Gaussian elimination on `n` packed rows of `stride` words, `n` columns.
/// Pivots are chosen column by column (left to right), taking the first
/// remaining row with a one in that column.
fn rank_in_place(rows: &mut [u64], stride: usize, n: usize) -> usize {
    let mut rank = 0;
    for col in 0..n {
        let (w, b) = (col / WORD, 1u64 << (col % WORD));
        let Some(p) = (rank..n).find(|&r| rows[r * stride + w] & b != 0) else {
            continue;
        };
        if p != rank {
            for k in 0..stride {
                rows.swap(p * stride + k, rank * stride + k);
            }
        }
        for r in rank + 1..n {
            if rows[r * stride + w] & b != 0 {
                // columns before `w` are already zero in both rows
                for k in w..stride {
                    let x = rows[rank * stride + k];
                    rows[r * stride + k] ^= x;
                }
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// Rank of a set of single-word rows.
fn rank_single_word(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    let n = rows.len();
    let all = rows.iter().fold(0, |a, r| a | r);
    let mut cols = all;
    while cols != 0 && rank < n {
        let b = cols & cols.wrapping_neg();
        cols &= cols - 1;
        let Some(p) = (rank..n).find(|&r| rows[r] & b != 0) else {
            continue;
        };
        rows.swap(p, rank);
        let pivot = rows[rank];
        for r in rows[rank + 1..].iter_mut() {
            if *r & b != 0 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

impl fmt::Display for Gf2Matrix {
    /// Writes the matrix text format, including the labels header.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "labels: {}", self.labels.join(" "))?;
        writeln!(f, "{}", self.n())?;
        for i in 0..self.n() {
            let row: Vec<&str> = (0..self.n())
                .map(|j| if self.get(i, j) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Gf2Matrix")
            .field("labels", &self.labels)
            .field("rows", &self.to_rows())
            .finish()
    }
}
