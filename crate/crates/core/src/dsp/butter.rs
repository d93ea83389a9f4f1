//! Butterworth filters as cascaded biquad sections with forward-backward
//! (zero-phase) application. Band-pass filtering is a 4th-order high-pass
//! followed by a 4th-order low-pass, each run through `filtfilt`.

/// One second-order section in direct form II transposed.
#[derive(Debug, Clone, Copy)]
pub struct Biquad {
    pub b0: f64,
    pub b1: f64,
    pub b2: f64,
    pub a1: f64,
    pub a2: f64,
}

impl Biquad {
    /// Run the section over `x` starting from steady-state initial
    /// conditions for a constant input equal to `x0`.
    fn run(&self, x: &[f64], x0: f64, out: &mut Vec<f64>) {
        // Steady-state z for unit constant input, scaled by x0: removes the
        // start-up transient for signals with a nonzero operating point.
        let h = (self.b0 + self.b1 + self.b2) / (1.0 + self.a1 + self.a2);
        let z2_ss = self.b2 - self.a2 * h;
        let z1_ss = self.b1 + self.b2 - (self.a1 + self.a2) * h;
        let mut z1 = z1_ss * x0;
        let mut z2 = z2_ss * x0;
        out.clear();
        out.reserve(x.len());
        for &xn in x {
            let y = self.b0 * xn + z1;
            z1 = self.b1 * xn - self.a1 * y + z2;
            z2 = self.b2 * xn - self.a2 * y;
            out.push(y);
        }
    }

    /// Magnitude response at normalized digital frequency `w` (rad/sample).
    pub fn magnitude(&self, w: f64) -> f64 {
        use rustfft::num_complex::Complex;
        let z1 = Complex::from_polar(1.0, -w);
        let z2 = z1 * z1;
        let num = Complex::new(self.b0, 0.0) + z1 * self.b1 + z2 * self.b2;
        let den = Complex::new(1.0, 0.0) + z1 * self.a1 + z2 * self.a2;
        (num / den).norm()
    }
}

/// Butterworth low-pass of order `order` (even), bilinear transform.
pub fn lowpass_sections(cutoff_hz: f64, fs: f64, order: usize) -> Vec<Biquad> {
    design(cutoff_hz, fs, order, false)
}

/// Butterworth high-pass of order `order` (even).
pub fn highpass_sections(cutoff_hz: f64, fs: f64, order: usize) -> Vec<Biquad> {
    design(cutoff_hz, fs, order, true)
}

/// 0.5–50 Hz style band-pass: order-4 high-pass at `lo` plus order-4
/// low-pass at `hi`.
pub fn bandpass_sections(lo_hz: f64, hi_hz: f64, fs: f64) -> Vec<Biquad> {
    let mut s = highpass_sections(lo_hz, fs, 4);
    s.extend(lowpass_sections(hi_hz, fs, 4));
    s
}

fn design(cutoff_hz: f64, fs: f64, order: usize, highpass: bool) -> Vec<Biquad> {
    assert!(order >= 2 && order % 2 == 0, "even filter order required");
    assert!(cutoff_hz > 0.0 && cutoff_hz < fs / 2.0, "cutoff must lie in (0, fs/2)");
    let k = (std::f64::consts::PI * cutoff_hz / fs).tan();
    let k2 = k * k;
    let mut sections = Vec::with_capacity(order / 2);
    for sec in 0..order / 2 {
        // Prototype pole pair q for Butterworth: 1 / (2 sin((2m-1)π/2N)).
        let q = 1.0 / (2.0 * ((2.0 * sec as f64 + 1.0) * std::f64::consts::PI / (2.0 * order as f64)).sin());
        let norm = k2 + k / q + 1.0;
        let (b0, b1, b2) = if highpass {
            (1.0 / norm, -2.0 / norm, 1.0 / norm)
        } else {
            (k2 / norm, 2.0 * k2 / norm, k2 / norm)
        };
        let a1 = 2.0 * (k2 - 1.0) / norm;
        let a2 = (k2 - k / q + 1.0) / norm;
        sections.push(Biquad { b0, b1, b2, a1, a2 });
    }
    sections
}

/// Forward-backward filtering through a biquad cascade.
///
/// The input is extended on both ends by odd reflection before filtering and
/// the extension is trimmed afterwards, so edge transients stay out of the
/// returned samples. The result has zero net phase shift.
pub fn filtfilt(sections: &[Biquad], x: &[f64]) -> Vec<f64> {
    if x.is_empty() || sections.is_empty() {
        return x.to_vec();
    }
    let n = x.len();
    // Pad past the slowest pole's transient: decay per sample is governed by
    // the largest pole radius across sections.
    let mut radius: f64 = 0.0;
    for s in sections {
        radius = radius.max(s.a2.abs().sqrt());
    }
    let decay = if radius >= 1.0 { 1e-3 } else { radius.max(0.1).ln().abs() };
    let wanted = ((14.0 / decay).ceil() as usize).max(24 * sections.len() + 3);
    let padlen = wanted.min(n - 1);
    let mut ext = Vec::with_capacity(n + 2 * padlen);
    for i in 0..padlen {
        ext.push(2.0 * x[0] - x[padlen - i]);
    }
    ext.extend_from_slice(x);
    for i in 0..padlen {
        ext.push(2.0 * x[n - 1] - x[n - 2 - i]);
    }

    let mut a = ext;
    let mut b = Vec::with_capacity(a.len());
    for sec in sections {
        let x0 = a[0];
        sec.run(&a, x0, &mut b);
        std::mem::swap(&mut a, &mut b);
    }
    a.reverse();
    for sec in sections {
        let x0 = a[0];
        sec.run(&a, x0, &mut b);
        std::mem::swap(&mut a, &mut b);
    }
    a.reverse();
    a[padlen..padlen + n].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sine(freq: f64, fs: f64, n: usize) -> Vec<f64> {
        (0..n).map(|i| (2.0 * std::f64::consts::PI * freq * i as f64 / fs).sin()).collect()
    }

    fn rms(x: &[f64]) -> f64 {
        (x.iter().map(|v| v * v).sum::<f64>() / x.len() as f64).sqrt()
    }

    #[test]
    fn lowpass_magnitude_matches_butterworth_formula() {
        // Order-4 Butterworth: |H(f)|^2 = 1 / (1 + (f/fc)^8).
        let fs = 250.0;
        let fc = 4.0;
        let secs = lowpass_sections(fc, fs, 4);
        for f in [1.0, 4.0, 10.0, 40.0] {
            // Prewarped analog frequency, so compare against the warped axis.
            let warp = |f: f64| (std::f64::consts::PI * f / fs).tan();
            let expect = 1.0 / (1.0 + (warp(f) / warp(fc)).powi(8)).sqrt();
            let w = 2.0 * std::f64::consts::PI * f / fs;
            let got: f64 = secs.iter().map(|s| s.magnitude(w)).product();
            assert!((got - expect).abs() < 1e-9, "f={f}: got {got} expect {expect}");
        }
    }

    #[test]
    fn filtfilt_passes_in_band_tone_unchanged() {
        let fs = 250.0;
        let x = sine(2.0, fs, 2500);
        let secs = bandpass_sections(0.5, 4.0, fs);
        let y = filtfilt(&secs, &x);
        let mid = &y[500..2000];
        let xin = &x[500..2000];
        assert!((rms(mid) / rms(xin) - 1.0).abs() < 0.05);
    }

    #[test]
    fn filtfilt_rejects_out_of_band_tone() {
        let fs = 250.0;
        let x = sine(10.0, fs, 2500);
        let secs = bandpass_sections(0.5, 4.0, fs);
        let y = filtfilt(&secs, &x);
        assert!(rms(&y) <= 0.01 * rms(&x), "rms out {} in {}", rms(&y), rms(&x));
    }

    #[test]
    fn filtfilt_has_zero_lag() {
        let fs = 250.0;
        let x = sine(2.0, fs, 2500);
        let secs = bandpass_sections(0.5, 4.0, fs);
        let y = filtfilt(&secs, &x);
        // Cross-correlate over lags -5..5; the peak must sit at 0.
        let mut best = (0i64, f64::MIN);
        for lag in -5i64..=5 {
            let mut s = 0.0;
            for i in 200..2300i64 {
                let j = i + lag;
                s += x[i as usize] * y[j as usize];
            }
            if s > best.1 {
                best = (lag, s);
            }
        }
        assert_eq!(best.0, 0);
    }
}
