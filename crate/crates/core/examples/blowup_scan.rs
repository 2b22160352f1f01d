//! Scans multiples of the exceptional class on blow-ups of the standard
//! spin presets and prints which are provably not represented by an
//! embedded symplectic surface.

use symsurf::{obstruction, CertificateKind, Manifold4, VerdictStatus};

fn main() -> symsurf::Result<()> {
    for base in [Manifold4::k3(), Manifold4::t4()] {
        let m = base.blow_up();
        let e = m.exceptional_class();
        println!("{} (sigma {}, b2+ {}):", m.name(), m.sigma(), m.b2_plus());
        for d in 2..=10 {
            let v = obstruction::check_fixed_divisor(&m, &e, d)?;
            let label = match v.status {
                VerdictStatus::Obstructed => "obstructed",
                VerdictStatus::Inconclusive => "inconclusive",
            };
            let route = match v.certificate.kind {
                CertificateKind::ViaSpinFuruta => "spin cover, nonzero signature",
                CertificateKind::ViaDivisibility => "divisible canonical class",
                CertificateKind::None => "no certificate",
            };
            println!(
                "  {}E: {label} ({route}, (K+(d-1)E)^2 = {})",
                d, v.k_base_sq
            );
        }
    }
    Ok(())
}
