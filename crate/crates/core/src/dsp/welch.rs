//! Welch averaged-periodogram PSD estimation: Hann-windowed overlapping
//! segments, per-segment mean removal, one-sided density scaling.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

/// Welch estimator settings. `nfft >= segment` zero-pads each windowed
/// segment for a finer frequency grid.
#[derive(Debug, Clone, Copy)]
pub struct WelchConfig {
    pub segment: usize,
    pub overlap: f64,
    pub nfft: usize,
}

impl WelchConfig {
    /// Catalogue default: 256-sample Hann segments, 50% overlap, native grid.
    pub fn native() -> Self {
        WelchConfig { segment: 256, overlap: 0.5, nfft: 256 }
    }

    /// Zero-padded variant used where a dense grid is needed (log-log PSD
    /// regression wants several bins inside the narrow delta/theta bands).
    pub fn fine() -> Self {
        WelchConfig { segment: 256, overlap: 0.5, nfft: 1024 }
    }
}

/// One-sided power spectral density on a uniform frequency grid.
#[derive(Debug, Clone)]
pub struct Psd {
    pub freqs: Vec<f64>,
    pub power: Vec<f64>,
}

impl Psd {
    /// Indices of bins with `lo <= f <= hi`.
    pub fn band_bins(&self, lo: f64, hi: f64) -> Vec<usize> {
        self.freqs
            .iter()
            .enumerate()
            .filter(|(_, &f)| f >= lo && f <= hi)
            .map(|(i, _)| i)
            .collect()
    }

    /// Rectangle-rule integral of the PSD over `lo..=hi`.
    pub fn band_power(&self, lo: f64, hi: f64) -> f64 {
        let df = if self.freqs.len() > 1 { self.freqs[1] - self.freqs[0] } else { 0.0 };
        self.band_bins(lo, hi).iter().map(|&i| self.power[i] * df).sum()
    }

    pub fn total_power(&self) -> f64 {
        self.power.iter().sum()
    }
}

fn hann(n: usize) -> Vec<f64> {
    // Periodic form, as conventional for spectral averaging.
    (0..n)
        .map(|i| 0.5 * (1.0 - (2.0 * std::f64::consts::PI * i as f64 / n as f64).cos()))
        .collect()
}

/// Welch PSD of a real signal sampled at `fs` Hz.
///
/// Signals shorter than the configured segment are handled with a single
/// shortened segment. Each segment has its mean removed before windowing.
pub fn welch_psd(x: &[f64], fs: f64, cfg: WelchConfig) -> Psd {
    assert!(fs > 0.0, "sampling rate must be positive");
    assert!(!x.is_empty(), "welch_psd on empty signal");
    let seg = cfg.segment.min(x.len()).max(2);
    let nfft = cfg.nfft.max(seg);
    let hop = ((seg as f64) * (1.0 - cfg.overlap)).round().max(1.0) as usize;
    let window = hann(seg);
    let win_power: f64 = window.iter().map(|w| w * w).sum();

    let mut planner = FftPlanner::<f64>::new();
    let fft = planner.plan_fft_forward(nfft);

    let n_bins = nfft / 2 + 1;
    let mut acc = vec![0.0f64; n_bins];
    let mut n_segments = 0usize;
    let mut buf = vec![Complex::new(0.0, 0.0); nfft];

    let mut start = 0;
    while start + seg <= x.len() {
        let chunk = &x[start..start + seg];
        let mean = chunk.iter().sum::<f64>() / seg as f64;
        for (i, slot) in buf.iter_mut().enumerate() {
            let v = if i < seg { (chunk[i] - mean) * window[i] } else { 0.0 };
            *slot = Complex::new(v, 0.0);
        }
        fft.process(&mut buf);
        for (k, slot) in acc.iter_mut().enumerate() {
            *slot += buf[k].norm_sqr();
        }
        n_segments += 1;
        if start + seg == x.len() {
            break;
        }
        start += hop;
    }
    // A trailing stretch shorter than one hop is dropped, like any partial
    // segment; guarantee at least one segment for very short inputs.
    if n_segments == 0 {
        let chunk = x;
        let seg = chunk.len();
        let window = hann(seg);
        let mean = chunk.iter().sum::<f64>() / seg as f64;
        for (i, slot) in buf.iter_mut().enumerate() {
            let v = if i < seg { (chunk[i] - mean) * window[i] } else { 0.0 };
            *slot = Complex::new(v, 0.0);
        }
        fft.process(&mut buf);
        let wp: f64 = window.iter().map(|w| w * w).sum();
        let scale = 1.0 / (fs * wp);
        let freqs: Vec<f64> = (0..n_bins).map(|k| k as f64 * fs / nfft as f64).collect();
        let mut power: Vec<f64> = (0..n_bins).map(|k| buf[k].norm_sqr() * scale).collect();
        for (k, p) in power.iter_mut().enumerate() {
            if k != 0 && !(nfft % 2 == 0 && k == n_bins - 1) {
                *p *= 2.0;
            }
        }
        return Psd { freqs, power };
    }

    let scale = 1.0 / (fs * win_power * n_segments as f64);
    let freqs: Vec<f64> = (0..n_bins).map(|k| k as f64 * fs / nfft as f64).collect();
    let mut power: Vec<f64> = acc.iter().map(|a| a * scale).collect();
    for (k, p) in power.iter_mut().enumerate() {
        if k != 0 && !(nfft % 2 == 0 && k == n_bins - 1) {
            *p *= 2.0;
        }
    }
    Psd { freqs, power }
}
