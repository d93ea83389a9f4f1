fn main() {
    let fs = 250.0;
    let x: Vec<f64> = (0..2500).map(|i| (2.0*std::f64::consts::PI*10.0*i as f64/fs).sin()).collect();
    let secs = eegage_core::dsp::bandpass_sections(0.5, 4.0, fs);
    let y = eegage_core::dsp::filtfilt(&secs, &x);
    let rms = |s: &[f64]| (s.iter().map(|v| v*v).sum::<f64>()/s.len() as f64).sqrt();
    println!("full {:.6e}", rms(&y));
    println!("first100 {:.6e}", rms(&y[..100]));
    println!("mid {:.6e}", rms(&y[500..2000]));
    println!("last100 {:.6e}", rms(&y[2400..]));
    let mag: f64 = secs.iter().map(|s| s.magnitude(2.0*std::f64::consts::PI*10.0/fs)).product();
    println!("cascade |H(10Hz)| = {:.6e} squared {:.6e}", mag, mag*mag);
}
