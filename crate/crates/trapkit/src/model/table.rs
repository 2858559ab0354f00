//! Local truth tables over an explicit list of relevant components.

/// A `2^k`-row truth table over `k` input components.
///
/// Row indices are big-endian over `inputs`: `inputs[0]` contributes the most
/// significant bit. Row `m` holds the value of the function at the input
/// whose bits spell `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    inputs: Vec<usize>,
    rows: Vec<bool>,
}

impl TruthTable {
    /// Panics if `inputs` repeats a component or `rows` is not `2^k` long;
    /// file input is validated by the parser before construction.
    pub fn new(inputs: Vec<usize>, rows: Vec<bool>) -> TruthTable {
        let k = inputs.len();
        assert!(k < usize::BITS as usize, "truth table arity too large");
        assert_eq!(rows.len(), 1usize << k, "truth table must have 2^k rows");
        let mut sorted = inputs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), k, "truth table inputs must be distinct");
        TruthTable { inputs, rows }
    }

    /// The constant table of arity 0.
    pub fn constant(value: bool) -> TruthTable {
        TruthTable {
            inputs: Vec::new(),
            rows: vec![value],
        }
    }

    pub fn arity(&self) -> usize {
        self.inputs.len()
    }

    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn rows(&self) -> &[bool] {
        &self.rows
    }

    pub fn row_of(&self, x: &[bool]) -> usize {
        let mut row = 0usize;
        for &p in &self.inputs {
            row = (row << 1) | usize::from(x[p]);
        }
        row
    }

    pub fn eval(&self, x: &[bool]) -> bool {
        self.rows[self.row_of(x)]
    }
}
