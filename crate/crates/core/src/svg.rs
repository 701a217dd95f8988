//! Minimal deterministic SVG writer.
//!
//! One user unit is one millimetre. Numbers are printed with six fractional
//! digits, trailing zeros trimmed and negative zero folded to `0`, so the same
//! drawing always produces the same bytes.

use std::fmt::Write as _;

use crate::vector::Vec2;

/// Fixed-precision number formatting used for every coordinate.
pub fn num(x: f64) -> String {
    let mut s = format!("{x:.6}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// Escapes text for element content and attribute values.
pub fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

/// Comments may not contain `--`.
fn comment_safe(s: &str) -> String {
    s.replace("--", "- -")
}

pub struct SvgDoc {
    width: f64,
    height: f64,
    title: String,
    meta: Vec<(String, String)>,
    classes: Vec<(&'static str, String)>,
    body: String,
}

impl SvgDoc {
    pub fn new(width_mm: f64, height_mm: f64, title: impl Into<String>) -> Self {
        SvgDoc {
            width: width_mm,
            height: height_mm,
            title: title.into(),
            meta: Vec::new(),
            classes: Vec::new(),
            body: String::new(),
        }
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    /// A generating parameter, recorded in the metadata block.
    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.meta.push((key.to_string(), value.to_string()));
    }

    /// Declares a CSS class; elements may only use declared classes.
    pub fn class(&mut self, name: &'static str, css: impl Into<String>) {
        self.classes.push((name, css.into()));
    }

    pub fn declared_classes(&self) -> Vec<&'static str> {
        self.classes.iter().map(|c| c.0).collect()
    }

    fn check(&self, class: &str) {
        debug_assert!(self.classes.iter().any(|c| c.0 == class), "undeclared class {class}");
    }

    pub fn line(&mut self, class: &'static str, a: Vec2, b: Vec2) {
        self.check(class);
        let _ = writeln!(
            self.body,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            num(a.x),
            num(a.y),
            num(b.x),
            num(b.y)
        );
    }

    pub fn circle(&mut self, class: &'static str, c: Vec2, r: f64) {
        self.check(class);
        let _ = writeln!(
            self.body,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
            num(c.x),
            num(c.y),
            num(r)
        );
    }

    pub fn polygon(&mut self, class: &'static str, pts: &[Vec2]) {
        self.check(class);
        let _ = writeln!(self.body, r#"<polygon class="{class}" points="{}"/>"#, points(pts));
    }

    pub fn polyline(&mut self, class: &'static str, pts: &[Vec2]) {
        self.check(class);
        let _ = writeln!(self.body, r#"<polyline class="{class}" points="{}"/>"#, points(pts));
    }

    /// A path; `d` must already use [`num`] for its numbers.
    pub fn path(&mut self, class: &'static str, d: &str) {
        self.check(class);
        let _ = writeln!(self.body, r#"<path class="{class}" d="{d}"/>"#);
    }

    pub fn text(&mut self, class: &'static str, at: Vec2, s: &str) {
        self.check(class);
        let _ = writeln!(
            self.body,
            r#"<text class="{class}" x="{}" y="{}">{}</text>"#,
            num(at.x),
            num(at.y),
            escape(s)
        );
    }

    pub fn finish(self) -> String {
        let (w, h) = (num(self.width), num(self.height));
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}mm" height="{h}mm" viewBox="0 0 {w} {h}">"#
        );
        let _ = writeln!(out, "<title>{}</title>", escape(&self.title));
        out.push_str("<metadata>\n");
        for (k, v) in &self.meta {
            let _ = writeln!(out, "<!-- {}: {} -->", comment_safe(k), comment_safe(v));
        }
        out.push_str("</metadata>\n<style>\n");
        for (name, css) in &self.classes {
            let _ = writeln!(out, ".{name} {{ {css} }}");
        }
        out.push_str("</style>\n");
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

fn points(pts: &[Vec2]) -> String {
    pts.iter()
        .map(|p| format!("{},{}", num(p.x), num(p.y)))
        .collect::<Vec<_>>()
        .join(" ")
}
