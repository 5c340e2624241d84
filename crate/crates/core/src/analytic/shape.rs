use crate::distribution::BGParams;
use crate::error::Result;

/// Bowley skewness `[Q(3/4) + Q(1/4) − 2Q(1/2)] / [Q(3/4) − Q(1/4)]`.
pub fn bowley_skewness(p: &BGParams) -> Result<f64> {
    let q1 = p.quantile(0.25)?;
    let q2 = p.quantile(0.5)?;
    let q3 = p.quantile(0.75)?;
    Ok(bowley_from_quartiles(q1, q2, q3))
}

pub(crate) fn bowley_from_quartiles(q1: f64, q2: f64, q3: f64) -> f64 {
    ((q3 - q2) - (q2 - q1)) / (q3 - q1)
}

/// Moors kurtosis `[Q(3/8) − Q(1/8) + Q(7/8) − Q(5/8)] / [Q(6/8) − Q(2/8)]`.
pub fn moors_kurtosis(p: &BGParams) -> Result<f64> {
    let mut o = [0.0; 8];
    for (k, slot) in o.iter_mut().enumerate().skip(1) {
        *slot = p.quantile(k as f64 / 8.0)?;
    }
    Ok(moors_from_octiles(&o))
}

/// `o[k]` is the k/8 quantile; `o[0]` is unused.
pub(crate) fn moors_from_octiles(o: &[f64; 8]) -> f64 {
    ((o[3] - o[1]) + (o[7] - o[5])) / (o[6] - o[2])
}
