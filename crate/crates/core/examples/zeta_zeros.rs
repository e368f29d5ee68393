//! ζ by two methods, then the zeros of Z(t) below T = 100.

use num_complex::Complex64;
use workbench::zeta::{count_sign_changes, theta, zeta_em, zeta_integral, DEFAULT_GRID_STEP};

fn main() -> workbench::Result<()> {
    for s in [Complex64::new(2.0, 0.0), Complex64::new(0.5, 0.0), Complex64::new(0.5, 14.134725)] {
        let a = zeta_integral(s, 1e-6)?;
        let b = zeta_em(s)?;
        println!("zeta({s}): integral {a:.7}, Euler-Maclaurin {b:.7}");
    }

    for t in [20.0, 50.0, 100.0] {
        let r = count_sign_changes(t, DEFAULT_GRID_STEP)?;
        println!(
            "T = {t}: {} sign changes, theta/pi + 1 = {:.3} (theta = {:.4}), with S(T): {}",
            r.sign_changes,
            r.argument_estimate,
            theta(t)?,
            r.argument_count
        );
    }
    let r = count_sign_changes(40.0, DEFAULT_GRID_STEP)?;
    let zeros: Vec<String> = r.zeros.iter().map(|z| format!("{z:.6}")).collect();
    println!("zeros below 40: {}", zeros.join(", "));
    Ok(())
}
