//! CSV writers for sampled wavelets, spectra and CWT grids.
//!
//! Floats are written with Rust's shortest round-trip formatting, so parsing
//! a cell back yields the identical `f64`.

use std::io::{self, Write};

use num_complex::Complex64;

use crate::transform::CwtGrid;

/// Shortest representation that parses back to the same value.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

/// `t,psi` rows.
pub fn write_wavelet_csv<W: Write>(mut out: W, samples: &[(f64, f64)]) -> io::Result<()> {
    writeln!(out, "t,psi")?;
    for &(t, psi) in samples {
        writeln!(out, "{},{}", fmt_f64(t), fmt_f64(psi))?;
    }
    Ok(())
}

/// `omega,re,im,abs` rows.
pub fn write_spectrum_csv<W: Write>(mut out: W, samples: &[(f64, Complex64)]) -> io::Result<()> {
    writeln!(out, "omega,re,im,abs")?;
    for &(w, f) in samples {
        writeln!(
            out,
            "{},{},{},{}",
            fmt_f64(w),
            fmt_f64(f.re),
            fmt_f64(f.im),
            fmt_f64(f.norm())
        )?;
    }
    Ok(())
}

/// Header row `scale,<shift_0>,<shift_1>,...`; each body row starts with
/// its scale.
pub fn write_cwt_csv<W: Write>(mut out: W, grid: &CwtGrid) -> io::Result<()> {
    let mut header = vec!["scale".to_string()];
    header.extend(grid.shifts.iter().map(|&b| fmt_f64(b)));
    writeln!(out, "{}", header.join(","))?;
    for (i, &a) in grid.scales.iter().enumerate() {
        let mut row = vec![fmt_f64(a)];
        row.extend(grid.coefficients.row(i).iter().map(|&c| fmt_f64(c)));
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}
