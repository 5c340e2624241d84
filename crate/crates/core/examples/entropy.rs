//! Shannon entropy and the Rényi family approaching it as λ → 1.
use beta_gompertz::analytic::{renyi_entropy, shannon_entropy};
use beta_gompertz::BGParams;

fn main() -> beta_gompertz::Result<()> {
    let p = BGParams::new(0.5, 0.8, 1.5, 2.0)?;
    println!("Shannon {:.8}", shannon_entropy(&p)?);
    for lambda in [0.5, 0.9, 0.99, 1.01, 1.1, 2.0, 3.0] {
        println!("Renyi({lambda}) {:.8}", renyi_entropy(lambda, &p)?);
    }
    Ok(())
}
