//! Succession rules, label censuses and fast counting.

use invseq::gentree::{count_class, count_class_by_census, label_census, ClassId};

fn main() {
    let census = label_census(ClassId::C1176, 3);
    println!("class 1176 labels at depth 3:");
    for (label, count) in &census.census {
        println!("  {label} x{count}");
    }
    for c in ClassId::ALL {
        let terms = count_class(c, 12);
        assert_eq!(terms, count_class_by_census(c, 12));
        println!("{c:>6} {} ... I_12 = {}", c.pattern_set(), terms[12]);
    }
    let big = count_class(ClassId::C2106, 200);
    println!("I_200 for class 2106 has {} digits", big[200].to_string().len());
}
