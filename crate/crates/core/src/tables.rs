//! Cardinality tables for the coverage/uniformity and pathology experiments.

use crate::weights::two_layer_size;

/// One row of a cardinality table: `N = C(H1+m−1, m−1) + C(H2+m−1, m−1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CardinalityRow {
    pub m: usize,
    pub n: usize,
    pub h1: usize,
    pub h2: usize,
}

impl CardinalityRow {
    pub const fn new(m: usize, n: usize, h1: usize, h2: usize) -> Self {
        Self { m, n, h1, h2 }
    }

    /// Size the lattice parameters actually produce.
    pub fn lattice_size(&self) -> usize {
        two_layer_size(self.m, self.h1, self.h2)
    }
}

/// Desired size `N*` and obtained size for the coverage and uniformity experiments.
pub const COVERAGE_TABLE: [(usize, CardinalityRow); 9] = [
    (100, CardinalityRow::new(2, 100, 99, 0)),
    (100, CardinalityRow::new(3, 105, 13, 0)),
    (150, CardinalityRow::new(4, 120, 7, 0)),
    (150, CardinalityRow::new(5, 126, 5, 0)),
    (150, CardinalityRow::new(6, 147, 4, 2)),
    (200, CardinalityRow::new(7, 168, 3, 3)),
    (200, CardinalityRow::new(8, 156, 3, 2)),
    (250, CardinalityRow::new(9, 210, 3, 2)),
    (250, CardinalityRow::new(10, 230, 3, 1)),
];

/// Target size class of a pathology experiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathologySize {
    N50,
    N100,
    N200,
}

impl PathologySize {
    pub const ALL: [PathologySize; 3] =
        [PathologySize::N50, PathologySize::N100, PathologySize::N200];

    pub fn label(self) -> &'static str {
        match self {
            PathologySize::N50 => "N50",
            PathologySize::N100 => "N100",
            PathologySize::N200 => "N200",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "n50" | "50" => Some(PathologySize::N50),
            "n100" | "100" => Some(PathologySize::N100),
            "n200" | "200" => Some(PathologySize::N200),
            _ => None,
        }
    }
}

/// Rows for `N50`, `N100` and `N200` per objective count.
pub const PATHOLOGY_TABLE: [[CardinalityRow; 3]; 9] = [
    [
        CardinalityRow::new(2, 50, 49, 0),
        CardinalityRow::new(2, 100, 99, 0),
        CardinalityRow::new(2, 200, 199, 0),
    ],
    [
        CardinalityRow::new(3, 45, 8, 0),
        CardinalityRow::new(3, 105, 13, 0),
        CardinalityRow::new(3, 210, 19, 0),
    ],
    [
        CardinalityRow::new(4, 56, 5, 0),
        CardinalityRow::new(4, 120, 7, 0),
        CardinalityRow::new(4, 220, 9, 0),
    ],
    [
        CardinalityRow::new(5, 50, 3, 2),
        CardinalityRow::new(5, 105, 4, 3),
        CardinalityRow::new(5, 210, 6, 0),
    ],
    [
        CardinalityRow::new(6, 42, 2, 2),
        CardinalityRow::new(6, 112, 3, 3),
        CardinalityRow::new(6, 258, 5, 1),
    ],
    [
        CardinalityRow::new(7, 56, 2, 2),
        CardinalityRow::new(7, 91, 3, 1),
        CardinalityRow::new(7, 210, 4, 0),
    ],
    [
        CardinalityRow::new(8, 44, 2, 1),
        CardinalityRow::new(8, 120, 3, 0),
        CardinalityRow::new(8, 240, 3, 3),
    ],
    [
        CardinalityRow::new(9, 45, 2, 0),
        CardinalityRow::new(9, 90, 2, 2),
        CardinalityRow::new(9, 210, 3, 2),
    ],
    [
        CardinalityRow::new(10, 55, 2, 0),
        CardinalityRow::new(10, 110, 2, 2),
        CardinalityRow::new(10, 220, 3, 0),
    ],
];

pub fn coverage_row(m: usize) -> Option<CardinalityRow> {
    COVERAGE_TABLE.iter().map(|(_, r)| *r).find(|r| r.m == m)
}

pub fn pathology_row(m: usize, size: PathologySize) -> Option<CardinalityRow> {
    let col = match size {
        PathologySize::N50 => 0,
        PathologySize::N100 => 1,
        PathologySize::N200 => 2,
    };
    PATHOLOGY_TABLE.iter().find(|r| r[0].m == m).map(|r| r[col])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_row_matches_its_lattice() {
        for (_, row) in COVERAGE_TABLE {
            assert_eq!(row.lattice_size(), row.n, "{row:?}");
        }
        for rows in PATHOLOGY_TABLE {
            for row in rows {
                assert_eq!(row.lattice_size(), row.n, "{row:?}");
            }
        }
        assert_eq!(pathology_row(6, PathologySize::N200).unwrap().n, 258);
        assert_eq!(coverage_row(7).unwrap().n, 168);
        assert!(coverage_row(11).is_none());
    }
}
