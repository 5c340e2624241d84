//! Bundled data.

use crate::error::Result;
use crate::inference::Dataset;

/// Text of `data/aarset.txt`.
pub const AARSET_TEXT: &str = include_str!("../../../data/aarset.txt");

/// Failure times (hours) of 50 devices from Aarset (1987).
pub fn aarset() -> Result<Dataset> {
    Dataset::parse(AARSET_TEXT)
}

#[cfg(test)]
mod tests {
    #[test]
    fn aarset_summary() {
        let d = super::aarset().unwrap();
        assert_eq!(d.n(), 50);
        assert!((d.mean() - 45.686).abs() < 1e-12);
        assert_eq!(d.values[0], 0.1);
        assert_eq!(d.values[49], 86.0);
    }
}
