//! Succession rules written out label by label.

use num_bigint::BigUint;
use num_traits::One;

use super::{Children, ClassId, Label, SuccessionRule, Tag};
use crate::combinat::{multiplicity_m, multiplicity_w};

fn one() -> BigUint {
    BigUint::one()
}

fn lab(tag: Tag, p: &[u32]) -> Label {
    Label::new(tag, p)
}

type Expand = fn(&Label, usize) -> Children;

pub(super) fn rule(class: ClassId) -> SuccessionRule {
    use ClassId::*;
    let (root, expand, counted): (Label, Expand, fn(&Label) -> bool) = match class {
        C1176 => (lab(Tag::A, &[0, 0]), expand_1176, |l| matches!(l.tag, Tag::A | Tag::D | Tag::E)),
        C1253 => (lab(Tag::A, &[0, 0]), expand_1253, |l| {
            matches!(l.tag, Tag::A | Tag::DDagger | Tag::EDagger)
        }),
        C1016 => (lab(Tag::A, &[0, 0]), expand_1016, |l| matches!(l.tag, Tag::A | Tag::D | Tag::EStar)),
        C830 => (lab(Tag::S, &[0, 0, 0]), expand_830, |_| true),
        C2106 => (lab(Tag::P, &[0, 0, 0]), expand_2106, |_| true),
        C663A => (lab(Tag::A, &[0]), expand_663a, |l| l.tag == Tag::A),
        C1420 => (lab(Tag::A, &[0]), expand_1420, |_| true),
        C1833A => (lab(Tag::Plain, &[0, 0]), expand_1833a, |_| true),
        C733 => (lab(Tag::Plain, &[0, 0]), expand_733, |l| l.params()[1] == 0),
        C214 => (lab(Tag::Plain, &[0, 0]), expand_214, |l| l.params()[1] == 0 && l.params()[0] <= 2),
        C1509 => (lab(Tag::Plain, &[0, 0]), expand_1509, |l| l.params()[1] <= 1),
        C1953A => (lab(Tag::Plain, &[0, 0]), expand_1953a, |_| true),
        C759 => (lab(Tag::Plain, &[0, 0]), expand_759, |l| l.params()[1] == 0),
        C247 => (lab(Tag::Plain, &[0, 0]), expand_247, |l| l.params()[1] == 0 && l.params()[0] <= 2),
    };
    SuccessionRule { class, root, expand, counted }
}

/// Children of `(n,h)_a` shared by the three right-grown two-parameter
/// classes; `low` is the tag given to `(i)` for `i < h`.
fn expand_a_right(l: &Label, depth: usize, low: Tag) -> Children {
    let (n, h) = (l.params()[0], l.params()[1]);
    assert_eq!(n as usize, depth, "label {l} seen at depth {depth}");
    let mut out = Vec::new();
    for i in h..=n {
        out.push((lab(Tag::A, &[n + 1, i]), one()));
    }
    for i in h..n {
        out.push((lab(Tag::B, &[i]), BigUint::from(n - i)));
    }
    for i in 0..h {
        out.push((lab(low, &[i]), one()));
    }
    out
}

fn expand_1176(l: &Label, depth: usize) -> Children {
    let k = l.params()[0];
    match l.tag {
        Tag::A => expand_a_right(l, depth, Tag::E),
        Tag::B => vec![(lab(Tag::B, &[k]), one()), (lab(Tag::C, &[k]), one())],
        Tag::C => vec![(lab(Tag::D, &[k]), one())],
        Tag::D => {
            let mut out = vec![(lab(Tag::D, &[k]), one())];
            out.extend((0..k).map(|i| (lab(Tag::E, &[i]), one())));
            out
        }
        Tag::E => (0..k).map(|i| (lab(Tag::E, &[i]), one())).collect(),
        _ => unreachable!("{l} is not a label of class 1176"),
    }
}

fn expand_1253(l: &Label, depth: usize) -> Children {
    let k = l.params()[0];
    match l.tag {
        Tag::A => expand_a_right(l, depth, Tag::EDagger),
        Tag::B => vec![(lab(Tag::B, &[k]), one()), (lab(Tag::CDagger, &[k]), one())],
        Tag::CDagger => vec![(lab(Tag::CDagger, &[k]), one()), (lab(Tag::DDagger, &[k]), one())],
        Tag::DDagger => vec![(lab(Tag::DDagger, &[k]), BigUint::from(2u32))],
        Tag::EDagger => vec![(lab(Tag::EDagger, &[k]), one())],
        _ => unreachable!("{l} is not a label of class 1253"),
    }
}

fn expand_1016(l: &Label, depth: usize) -> Children {
    let k = l.params()[0];
    match l.tag {
        Tag::A => expand_a_right(l, depth, Tag::EStar),
        Tag::B => vec![(lab(Tag::B, &[k]), one()), (lab(Tag::C, &[k]), one())],
        Tag::C => vec![(lab(Tag::D, &[k]), one())],
        Tag::D => vec![(lab(Tag::D, &[k]), one())],
        Tag::EStar => Vec::new(),
        _ => unreachable!("{l} is not a label of class 1016"),
    }
}

fn expand_830(l: &Label, depth: usize) -> Children {
    let [n, h, k] = [l.params()[0], l.params()[1], l.params()[2]];
    assert_eq!(n as usize, depth, "label {l} seen at depth {depth}");
    let mut out = vec![(lab(Tag::S, &[n + 1, h, k]), one())];
    for i in h + 1..=n {
        out.push((lab(Tag::S, &[n + 1, i, h]), one()));
    }
    let lo = match l.tag {
        Tag::S => k + 1,
        Tag::T => k,
        _ => unreachable!("{l} is not a label of class 830"),
    };
    for i in lo..h {
        out.push((lab(Tag::T, &[n + 1, h, i]), one()));
    }
    out
}

fn expand_2106(l: &Label, depth: usize) -> Children {
    let [n, h, k] = [l.params()[0], l.params()[1], l.params()[2]];
    assert_eq!(n as usize, depth, "label {l} seen at depth {depth}");
    let mut out = Vec::new();
    match l.tag {
        Tag::P => {
            for i in h..=n {
                out.push((lab(Tag::P, &[n + 1, i, k + i - h]), one()));
            }
        }
        Tag::Q => {
            for i in h + 1..=n {
                out.push((lab(Tag::P, &[n + 1, i, k + i - h - 1]), one()));
            }
        }
        _ => unreachable!("{l} is not a label of class 2106"),
    }
    for i in 0..k {
        out.push((lab(Tag::Q, &[n + 1, h, i]), one()));
    }
    out
}

fn expand_663a(l: &Label, _depth: usize) -> Children {
    let p = l.params()[0];
    match l.tag {
        Tag::A => {
            let mut out: Children = (1..=p + 1).map(|k| (lab(Tag::A, &[k]), one())).collect();
            out.extend((1..p).map(|m| (lab(Tag::B, &[m]), one())));
            out
        }
        Tag::B => vec![(lab(Tag::A, &[p + 1]), one()), (lab(Tag::B, &[p + 1]), one())],
        _ => unreachable!("{l} is not a label of class 663A"),
    }
}

fn expand_1420(l: &Label, _depth: usize) -> Children {
    let p = l.params()[0];
    let mut out: Children = (0..=p).map(|i| (lab(Tag::A, &[p + 1 - i]), one())).collect();
    out.extend((2..=p).map(|i| (lab(Tag::B, &[p + 1 - i]), one())));
    match l.tag {
        Tag::A => {}
        Tag::B => out.push((lab(Tag::B, &[p + 1]), one())),
        _ => unreachable!("{l} is not a label of class 1420"),
    }
    out
}

fn pair(l: &Label) -> (u32, u32) {
    (l.params()[0], l.params()[1])
}

fn plain(p: u32, s: u32) -> (Label, BigUint) {
    (lab(Tag::Plain, &[p, s]), one())
}

/// `(p,s) -> (p+1,s)` and, when `s > 0`, `(p+1,0)`.
fn grow_reset(p: u32, s: u32, out: &mut Children) {
    out.push(plain(p + 1, s));
    if s > 0 {
        out.push(plain(p + 1, 0));
    }
}

/// `(p,s) -> (p+1,s)` and, when `s > 0`, `(p+1,s-1)`.
fn grow_decrement(p: u32, s: u32, out: &mut Children) {
    out.push(plain(p + 1, s));
    if s > 0 {
        out.push(plain(p + 1, s - 1));
    }
}

/// `(p-l, k)` for `l` in `[0, p-1]`, `k` in `[0, l]`.
fn drop_triangle(p: u32, out: &mut Children) {
    for l in 0..p {
        for k in 0..=l {
            out.push(plain(p - l, k));
        }
    }
}

fn expand_1833a(l: &Label, _depth: usize) -> Children {
    let (p, s) = pair(l);
    let mut out = Vec::new();
    grow_reset(p, s, &mut out);
    drop_triangle(p, &mut out);
    out
}

fn expand_733(l: &Label, _depth: usize) -> Children {
    let (p, s) = pair(l);
    let mut out = Vec::new();
    grow_reset(p, s, &mut out);
    if s == 0 {
        drop_triangle(p, &mut out);
    }
    out
}

fn expand_214(l: &Label, _depth: usize) -> Children {
    let (p, s) = pair(l);
    let mut out = Vec::new();
    grow_decrement(p, s, &mut out);
    if s == 0 {
        for m in 0..p {
            out.push(plain(p - m, m));
        }
        for m in 0..p.saturating_sub(1) {
            out.push(plain(p - m - 1, m));
        }
    }
    out
}

fn expand_1509(l: &Label, _depth: usize) -> Children {
    let (p, s) = pair(l);
    let mut out = Vec::new();
    grow_decrement(p, s, &mut out);
    if s <= 1 {
        for i in 0..p {
            out.push(plain(p - i, 0));
        }
        for m in 1..p {
            for k in 0..m {
                out.push(plain(p - m, m - k));
            }
        }
    }
    out
}

fn expand_1953a(l: &Label, _depth: usize) -> Children {
    let (p, s) = pair(l);
    let mut out: Children = (0..=s).map(|i| plain(p + 1, s - i)).collect();
    for m in 1..=p {
        for k in 0..m {
            out.push(plain(p + 1 - m, k));
        }
    }
    out
}

fn commit_children(l: &Label, mult: fn(u64, u64) -> BigUint) -> Children {
    let (p, c) = pair(l);
    let mut out = Vec::new();
    grow_decrement(p, c, &mut out);
    if c == 0 && p >= 1 {
        for m in 0..p {
            for b in 0..=m {
                let w = mult(m as u64, b as u64);
                if w > BigUint::ZERO {
                    out.push((lab(Tag::Plain, &[p - m, b]), w));
                }
            }
        }
    }
    out
}

fn expand_759(l: &Label, _depth: usize) -> Children {
    commit_children(l, multiplicity_m)
}

fn expand_247(l: &Label, _depth: usize) -> Children {
    commit_children(l, multiplicity_w)
}
