//! Prints the SOM and ISOM learning-rate and radius schedules.
//!
//!     cargo run --example schedules

use somlayout::{isom, som, IsomParams, SomParams};

fn main() -> somlayout::Result<()> {
    let sp = SomParams::default();
    println!("SOM (t_max = {})", sp.t_max);
    println!("{:>9} {:>8} {:>6} {:>6}", "t", "alpha", "r", "sigma");
    for i in 0..=10 {
        let t = (i * (sp.t_max - 1)) / 10;
        let s = som::som_schedule(t, &sp)?;
        println!("{t:>9} {:>8.4} {:>6} {:>6.2}", s.alpha, s.radius, s.sigma);
    }

    for (label, ip) in [
        ("staged", IsomParams::default()),
        ("per-epoch", IsomParams::default().with_per_epoch_radius_decay()),
    ] {
        println!("\nISOM {label} (t_max = {})", ip.t_max);
        println!("{:>9} {:>8} {:>6}", "t", "adaption", "r");
        for i in 0..=10 {
            let t = i * ip.t_max / 10;
            println!("{t:>9} {:>8.4} {:>6}", isom::isom_adaption(t, &ip)?, isom::isom_radius(t, &ip));
        }
    }
    Ok(())
}
