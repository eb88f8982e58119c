//! Line-oriented text format for circuits.
//!
//! ```text
//! wires: a b c          # first wire is the most significant bit
//! ket a |0>
//! H a
//! CNOT a -> b           # control -> target
//! RZ(pi/8) c ctrl n(a) ctrl nbar(b)
//! MAT2 [[0, 1], [1, 0]] on c
//! projzz 1 on a b
//! scalar 2*sqrt(2)
//! bra a <+X|
//! ```
//!
//! Statements apply in file order. Besides the core statements the parser
//! accepts `MAT<d>` for any power of two `d`, multi-wire state vectors
//! (`ket a b [c0, c1, c2, c3]`), explicit projector boxes
//! (`proj [[...]] on a b`) and projector controls (`ctrl proj [[...]] (a b)`).

use thiserror::Error;

use crate::gates::Axis;
use crate::tensor::{Complex, ComplexMatrix, WireList};

use super::expr::{check_finite, format_complex, Cursor, ExprError};
use super::{Circuit, CircuitError, Control, Element, Gate, ProjectorKind, StateSpec};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("unknown gate `{0}`")]
    UnknownGate(String),
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

const RESERVED: [&str; 2] = ["on", "ctrl"];

struct Line {
    number: usize,
    cur: Cursor,
}

impl Line {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.number, kind }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.err(ParseErrorKind::Syntax(msg.into()))
    }

    fn lift(&self, e: ExprError) -> ParseError {
        self.syntax(e.to_string())
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        self.cur.expect(s).map_err(|e| self.lift(e))
    }

    fn label(&mut self) -> Result<String, ParseError> {
        match self.cur.word() {
            Some(w) if !RESERVED.contains(&w.as_str()) => Ok(w),
            Some(w) => Err(self.syntax(format!("`{w}` cannot be used as a wire label"))),
            None => Err(self.syntax(format!("expected a wire label at column {}", self.cur.col()))),
        }
    }

    /// Labels up to `ctrl`, a delimiter, or end of line.
    fn labels(&mut self) -> Vec<String> {
        let mut out = Vec::new();
        while let Some(w) = self.cur.peek_word() {
            if RESERVED.contains(&w.as_str()) {
                break;
            }
            self.cur.word();
            out.push(w);
        }
        out
    }

    fn bit(&mut self) -> Result<u8, ParseError> {
        match self.cur.word().as_deref() {
            Some("0") => Ok(0),
            Some("1") => Ok(1),
            _ => Err(self.syntax("expected a bit (0 or 1)")),
        }
    }

    fn axis(&mut self) -> Result<Axis, ParseError> {
        let w = self.cur.word().unwrap_or_default();
        Axis::parse(&w).ok_or_else(|| self.syntax(format!("expected an axis X, Y or Z, found `{w}`")))
    }

    fn complex(&mut self) -> Result<Complex, ParseError> {
        let v = self.cur.expr().map_err(|e| self.lift(e))?;
        check_finite(&self.cur, v).map_err(|e| self.lift(e))
    }

    fn real(&mut self) -> Result<f64, ParseError> {
        let v = self.complex()?;
        if v.im != 0.0 {
            return Err(self.syntax("gate parameters must be real"));
        }
        Ok(v.re)
    }

    fn vector(&mut self) -> Result<Vec<Complex>, ParseError> {
        self.expect("[")?;
        let mut out = vec![self.complex()?];
        while self.cur.eat(",") {
            out.push(self.complex()?);
        }
        self.expect("]")?;
        Ok(out)
    }

    fn matrix(&mut self) -> Result<ComplexMatrix, ParseError> {
        let bad = |l: &Line, msg: &str| l.err(ParseErrorKind::MalformedMatrix(msg.to_string()));
        if !self.cur.eat("[") {
            return Err(bad(self, "expected `[[`"));
        }
        let mut rows = Vec::new();
        loop {
            if self.cur.peek() != Some('[') {
                return Err(bad(self, "expected a bracketed row"));
            }
            rows.push(self.vector().map_err(|e| match e.kind {
                ParseErrorKind::Syntax(m) => bad(self, &m),
                _ => e,
            })?);
            if !self.cur.eat(",") {
                break;
            }
        }
        if !self.cur.eat("]") {
            return Err(bad(self, "expected `]` closing the matrix"));
        }
        ComplexMatrix::from_rows(&rows).map_err(|e| bad(self, &e.to_string()))
    }

    fn controls(&mut self) -> Result<Vec<Control>, ParseError> {
        let mut out = Vec::new();
        while self.cur.peek_word().as_deref() == Some("ctrl") {
            self.cur.word();
            match self.cur.word().as_deref() {
                Some("n") => {
                    self.expect("(")?;
                    let w = self.label()?;
                    self.expect(")")?;
                    out.push(Control::N(w));
                }
                Some("nbar") => {
                    self.expect("(")?;
                    let w = self.label()?;
                    self.expect(")")?;
                    out.push(Control::NBar(w));
                }
                Some("proj") => {
                    let matrix = self.matrix()?;
                    self.expect("(")?;
                    let wires = self.labels();
                    self.expect(")")?;
                    out.push(Control::Projector { matrix, wires });
                }
                _ => return Err(self.syntax("expected n(..), nbar(..) or proj [[..]] (..) after `ctrl`")),
            }
        }
        if !self.cur.at_end() {
            return Err(self.syntax(format!("unexpected input `{}`", self.cur.rest().trim())));
        }
        Ok(out)
    }

    fn gate_tail(&mut self, gate: Gate) -> Result<Element, ParseError> {
        if self.cur.peek_word().as_deref() == Some("on") {
            self.cur.word();
        }
        let targets = self.labels();
        if targets.is_empty() {
            return Err(self.syntax("gate needs at least one target wire"));
        }
        let controls = self.controls()?;
        Ok(Element::Gate { gate, targets, controls })
    }

    fn end(&mut self) -> Result<(), ParseError> {
        if self.cur.at_end() {
            Ok(())
        } else {
            Err(self.syntax(format!("unexpected input `{}`", self.cur.rest().trim())))
        }
    }

    fn statement(&mut self) -> Result<Element, ParseError> {
        let name = self.cur.word().ok_or_else(|| self.syntax("expected a statement"))?;
        match name.as_str() {
            "X" => self.gate_tail(Gate::X),
            "Y" => self.gate_tail(Gate::Y),
            "Z" => self.gate_tail(Gate::Z),
            "H" => self.gate_tail(Gate::H),
            "S" => self.gate_tail(Gate::S),
            "E" => self.gate_tail(Gate::E),
            "RZ" => {
                self.expect("(")?;
                let t = self.real()?;
                self.expect(")")?;
                self.gate_tail(Gate::Rz(t))
            }
            "ROT" => {
                self.expect("(")?;
                let x = self.real()?;
                self.expect(",")?;
                let y = self.real()?;
                self.expect(",")?;
                let z = self.real()?;
                self.expect(")")?;
                self.gate_tail(Gate::Rot([x, y, z]))
            }
            "CNOT" => {
                let control = self.label()?;
                self.expect("->")?;
                let target = self.label()?;
                let mut controls = vec![Control::N(control)];
                controls.extend(self.controls()?);
                Ok(Element::Gate { gate: Gate::X, targets: vec![target], controls })
            }
            "ket" | "bra" => {
                let wires = self.labels();
                if wires.is_empty() {
                    return Err(self.syntax(format!("`{name}` needs a wire")));
                }
                let state = self.state(name == "ket")?;
                self.end()?;
                Ok(if name == "ket" { Element::Ket { wires, state } } else { Element::Bra { wires, state } })
            }
            "scalar" => {
                let z = self.complex()?;
                self.end()?;
                Ok(Element::Scalar(z))
            }
            "projz" | "projzz" | "projpair" | "proj" => {
                let kind = match name.as_str() {
                    "projz" => ProjectorKind::Z(self.bit()?),
                    "projzz" => ProjectorKind::ZZ(self.bit()?),
                    "projpair" => {
                        let a = self.axis()?;
                        let b = self.axis()?;
                        ProjectorKind::Pair(a, b, self.bit()?)
                    }
                    _ => ProjectorKind::Matrix(self.matrix()?),
                };
                if self.cur.word().as_deref() != Some("on") {
                    return Err(self.syntax("expected `on` before projector wires"));
                }
                let targets = self.labels();
                self.end()?;
                Ok(Element::Projector { kind, targets })
            }
            m if m.starts_with("MAT") => {
                let d: usize = m[3..].parse().map_err(|_| self.err(ParseErrorKind::UnknownGate(m.to_string())))?;
                let matrix = self.matrix()?;
                if matrix.dims() != (d, d) || !d.is_power_of_two() || d < 2 {
                    return Err(self.err(ParseErrorKind::MalformedMatrix(format!(
                        "{m} needs a {d}x{d} literal with d a power of two, found {}x{}",
                        matrix.rows(),
                        matrix.cols()
                    ))));
                }
                self.gate_tail(Gate::Matrix(matrix))
            }
            other => Err(self.err(ParseErrorKind::UnknownGate(other.to_string()))),
        }
    }

    fn state(&mut self, ket: bool) -> Result<StateSpec, ParseError> {
        if self.cur.peek() == Some('[') {
            return Ok(StateSpec::Vector(self.vector()?));
        }
        let names = [
            ("0", StateSpec::Zero),
            ("1", StateSpec::One),
            ("+X", StateSpec::PlusX),
            ("-X", StateSpec::MinusX),
            ("+Y", StateSpec::PlusY),
            ("-Y", StateSpec::MinusY),
        ];
        let (open, close) = if ket { ("|", ">") } else { ("<", "|") };
        self.expect(open)?;
        for (text, spec) in names {
            if self.cur.eat(text) {
                self.expect(close)?;
                return Ok(spec);
            }
        }
        Err(self.syntax("unknown state; expected 0, 1, +X, -X, +Y, -Y or a [..] vector"))
    }
}

/// Parse circuit text. Errors carry the 1-based line number.
pub fn parse(text: &str) -> Result<Circuit, ParseError> {
    let mut circuit: Option<Circuit> = None;
    let mut last_line = 1;
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let mut line = Line { number: i + 1, cur: Cursor::new(body) };
        last_line = i + 1;
        match &mut circuit {
            None => {
                if line.cur.word().as_deref() != Some("wires") || !line.cur.eat(":") {
                    return Err(line.syntax("expected `wires:` declaration first"));
                }
                let labels = line.labels();
                if labels.is_empty() {
                    return Err(line.syntax("declare at least one wire"));
                }
                line.end()?;
                let wires = WireList::new(labels).map_err(|e| line.err(ParseErrorKind::Circuit(e.into())))?;
                circuit = Some(Circuit::empty(wires).map_err(|e| line.err(e.into()))?);
            }
            Some(c) => {
                let e = line.statement()?;
                c.push(e).map_err(|e| line.err(e.into()))?;
            }
        }
    }
    circuit.ok_or(ParseError { line: last_line, kind: ParseErrorKind::Syntax("missing `wires:` declaration".into()) })
}

fn fmt_vector(v: &[Complex]) -> String {
    let parts: Vec<String> = v.iter().map(|z| format_complex(*z)).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_matrix(m: &ComplexMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| fmt_vector(&m.data()[r * m.cols()..(r + 1) * m.cols()]))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn fmt_controls(controls: &[Control]) -> String {
    controls
        .iter()
        .map(|ctl| match ctl {
            Control::N(w) => format!(" ctrl n({w})"),
            Control::NBar(w) => format!(" ctrl nbar({w})"),
            Control::Projector { matrix, wires } => format!(" ctrl proj {} ({})", fmt_matrix(matrix), wires.join(" ")),
        })
        .collect()
}

fn fmt_state(state: &StateSpec, ket: bool) -> String {
    let name = match state {
        StateSpec::Zero => "0",
        StateSpec::One => "1",
        StateSpec::PlusX => "+X",
        StateSpec::MinusX => "-X",
        StateSpec::PlusY => "+Y",
        StateSpec::MinusY => "-Y",
        StateSpec::Vector(v) => return fmt_vector(v),
    };
    if ket {
        format!("|{name}>")
    } else {
        format!("<{name}|")
    }
}

fn fmt_element(e: &Element) -> String {
    match e {
        Element::Gate { gate: Gate::X, targets, controls } if targets.len() == 1 && matches!(controls.first(), Some(Control::N(_))) => {
            let Some(Control::N(ctl)) = controls.first() else { unreachable!() };
            format!("CNOT {ctl} -> {}{}", targets[0], fmt_controls(&controls[1..]))
        }
        Element::Gate { gate, targets, controls } => {
            let head = match gate {
                Gate::X => "X".to_string(),
                Gate::Y => "Y".to_string(),
                Gate::Z => "Z".to_string(),
                Gate::H => "H".to_string(),
                Gate::S => "S".to_string(),
                Gate::E => "E".to_string(),
                Gate::Rz(t) => format!("RZ({t})"),
                Gate::Rot([x, y, z]) => format!("ROT({x}, {y}, {z})"),
                Gate::Matrix(m) => format!("MAT{} {} on", m.rows(), fmt_matrix(m)),
            };
            format!("{head} {}{}", targets.join(" "), fmt_controls(controls))
        }
        Element::Projector { kind, targets } => {
            let head = match kind {
                ProjectorKind::Z(j) => format!("projz {j}"),
                ProjectorKind::ZZ(j) => format!("projzz {j}"),
                ProjectorKind::Pair(a, b, j) => format!("projpair {} {} {j}", a.name(), b.name()),
                ProjectorKind::Matrix(m) => format!("proj {}", fmt_matrix(m)),
            };
            format!("{head} on {}", targets.join(" "))
        }
        Element::Ket { wires, state } => format!("ket {} {}", wires.join(" "), fmt_state(state, true)),
        Element::Bra { wires, state } => format!("bra {} {}", wires.join(" "), fmt_state(state, false)),
        Element::Scalar(z) => format!("scalar {}", format_complex(*z)),
    }
}

/// Render a circuit in the text format; `parse(&to_text(c)) == c` for any
/// circuit whose labels are plain words.
pub fn to_text(circuit: &Circuit) -> String {
    let mut out = format!("wires: {}\n", circuit.wires());
    for e in circuit.elements() {
        out.push_str(&fmt_element(e));
        out.push('\n');
    }
    out
}
