//! SVG rendering of a packing, origin at the bottom-left.

use std::fmt::Write;

use cornerpack::{Layout, Packing};

const CELL: u64 = 24;
const MARGIN: u64 = 8;

pub fn render(p: &Packing) -> String {
    let c = p.container();
    let (w, h) = (u64::from(c.width()), u64::from(c.height()));
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        w * CELL + 2 * MARGIN,
        h * CELL + 2 * MARGIN,
        w * CELL + 2 * MARGIN,
        h * CELL + 2 * MARGIN,
    )
    .unwrap();
    writeln!(
        out,
        r#"  <rect class="container" x="{MARGIN}" y="{MARGIN}" width="{}" height="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        w * CELL,
        h * CELL,
    )
    .unwrap();

    for (i, r) in p.placed() {
        let x = MARGIN + u64::from(r.x()) * CELL;
        // Flip so that y grows upwards.
        let y = MARGIN + (h - r.top()) * CELL;
        let (rw, rh) = (u64::from(r.width()) * CELL, u64::from(r.height()) * CELL);
        let hue = (i * 137) % 360;
        writeln!(
            out,
            r#"  <rect class="piece" x="{x}" y="{y}" width="{rw}" height="{rh}" fill="hsl({hue},60%,75%)" stroke="black" stroke-width="1"/>"#,
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            x + rw / 2,
            y + rh / 2,
            i + 1,
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
