//! Reduced effective classes and the families that evaluate them.
use burniat::cohomology::{classify_reduced, h0_base_case, FamilyKind};
use burniat::Torsion;

fn main() -> burniat::Result<()> {
    for kind in [FamilyKind::L00L, FamilyKind::L00Lm1, FamilyKind::L01Lm1, FamilyKind::L0Lm1_1] {
        let base = kind.base(4)?;
        println!("{kind} at l = 4: {}", base.table_row());
        for t in Torsion::all() {
            let d = base.twist(t);
            if d.is_reduced_form() {
                let fam = classify_reduced(&d)?;
                println!(
                    "  tau = {t}  -> {} l={} via {}, h0 = {}",
                    fam.kind,
                    fam.ell,
                    fam.symmetry,
                    h0_base_case(&fam)?
                );
            }
        }
    }
    Ok(())
}
