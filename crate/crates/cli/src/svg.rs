//! Standalone SVG figure: enclosing circle, hull, chosen polygon, filled
//! extremal and open internal vertices, optional arc cuts and `φ` wedge.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use maxangle_core::pea::Wedge;
use maxangle_core::{Circle, PointSet, Polygonization, Vec2};

pub struct SvgScene<'a> {
    pub set: &'a PointSet,
    pub circle: &'a Circle,
    pub polygon: &'a Polygonization,
    pub label: Option<&'a str>,
    /// Cut angles on the circle.
    pub cuts: Option<&'a [f64]>,
    /// Critical vertex and the pot wedge drawn at it.
    pub phi: Option<(usize, Wedge)>,
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn xy(p: Vec2) -> String {
    format!("{},{}", num(p.x), num(-p.y))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

pub fn render_svg(scene: &SvgScene<'_>) -> String {
    let c = scene.circle;
    let r = if c.radius > 0.0 { c.radius } else { 1.0 };
    let pad = 1.15 * r;
    let stroke = r * 0.006;
    let dot = r * 0.022;
    let pts: Vec<Vec2> = scene.set.points().iter().map(|p| p.to_vec2()).collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"640\" height=\"640\">",
        num(c.center.x - pad),
        num(-c.center.y - pad),
        num(2.0 * pad),
        num(2.0 * pad)
    );
    if let Some(label) = scene.label {
        let _ = writeln!(out, "  <title>{}</title>", escape(label));
    }
    let _ = writeln!(
        out,
        "  <circle id=\"enclosing\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#777777\" stroke-width=\"{}\"/>",
        num(c.center.x),
        num(-c.center.y),
        num(c.radius),
        num(stroke)
    );
    if let Some(cuts) = scene.cuts {
        let _ = writeln!(
            out,
            "  <g id=\"cuts\" stroke=\"#b04040\" stroke-width=\"{}\">",
            num(stroke * 0.5)
        );
        for &t in cuts {
            let dir = Vec2::new(t.cos(), t.sin());
            let a = c.center.plus(dir.scale(r * 0.97));
            let b = c.center.plus(dir.scale(r * 1.03));
            let _ = writeln!(
                out,
                "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                num(a.x),
                num(-a.y),
                num(b.x),
                num(-b.y)
            );
        }
        let _ = writeln!(out, "  </g>");
    }
    let ring = |idx: &mut dyn Iterator<Item = usize>| {
        idx.map(|i| xy(pts[i])).collect::<Vec<_>>().join(" ")
    };
    let _ = writeln!(
        out,
        "  <polygon id=\"best\" points=\"{}\" fill=\"#dbe6f5\" stroke=\"#000000\" stroke-width=\"{}\"/>",
        ring(&mut scene.polygon.order().iter().copied()),
        num(stroke)
    );
    let _ = writeln!(
        out,
        "  <polygon id=\"hull\" points=\"{}\" fill=\"none\" stroke=\"#3a7a3a\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\"/>",
        ring(&mut scene.set.hull().iter().copied()),
        num(stroke),
        num(stroke * 4.0),
        num(stroke * 3.0)
    );
    if let Some((v, w)) = scene.phi {
        let s = pts[v];
        let len = r * 0.25;
        let a = s.plus(Vec2::new(w.start.cos(), w.start.sin()).scale(len));
        let e = w.start + w.measure;
        let b = s.plus(Vec2::new(e.cos(), e.sin()).scale(len));
        let large = u8::from(w.measure > std::f64::consts::PI);
        let _ = writeln!(
            out,
            "  <path id=\"phi\" d=\"M {} L {} A {} {} 0 {} 0 {} Z\" fill=\"#f0c040\" fill-opacity=\"0.6\" stroke=\"#a07000\" stroke-width=\"{}\"/>",
            xy(s),
            xy(a),
            num(len),
            num(len),
            large,
            xy(b),
            num(stroke * 0.5)
        );
    }
    let _ = writeln!(
        out,
        "  <g id=\"points\" stroke=\"#000000\" stroke-width=\"{}\">",
        num(stroke)
    );
    for (i, p) in pts.iter().enumerate() {
        let fill = if scene.set.is_extremal(i) {
            "#000000"
        } else {
            "#ffffff"
        };
        let _ = writeln!(
            out,
            "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\"/>",
            num(p.x),
            num(-p.y),
            num(dot)
        );
    }
    let _ = writeln!(out, "  </g>");
    let m = pts[scene.polygon.max_vertex()];
    let _ = writeln!(
        out,
        "  <circle id=\"max-angle\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#c02020\" stroke-width=\"{}\"/>",
        num(m.x),
        num(-m.y),
        num(dot * 2.5),
        num(stroke)
    );
    out.push_str("</svg>\n");
    out
}

pub fn write_svg(scene: &SvgScene<'_>, path: &Path) -> std::io::Result<()> {
    fs::write(path, render_svg(scene))
}
