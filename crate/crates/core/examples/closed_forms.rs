//! Expanding algebraic generating functions exactly.

use invseq::gentree::{count_class, ClassId};
use invseq::series::{closed_form_733_by_conjugates, expand_closed_form, minimal_polynomial, TruncatedSeries};

fn main() -> invseq::Result<()> {
    for c in ClassId::ALGEBRAIC {
        let f = expand_closed_form(c, 15)?;
        assert_eq!(f.to_counts()?, count_class(c, 15));
        let p = minimal_polynomial(c)?;
        let ok = p.annihilates(&TruncatedSeries::from_counts(&count_class(c, 40)));
        println!("{c}: {f}");
        println!("  degree {} annihilator ({}), vanishes mod z^41: {ok}", p.degree(), if p.derived { "derived" } else { "given" });
    }
    let a = closed_form_733_by_conjugates(20)?;
    println!("733 via conjugate roots in Q(sqrt 5) agrees: {}", a == expand_closed_form(ClassId::C733, 20)?);
    Ok(())
}
