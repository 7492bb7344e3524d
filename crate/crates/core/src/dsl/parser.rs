// Recursive-descent parser. One function per precedence level, loosest
// first; `expected` accumulates what could have appeared at the current
// token so errors can list it.

use super::ast::{BinOp, Expr, UnOp};
use super::lexer::{tokenize, Pos, Tok};
use super::SyntaxError;

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    expected: Vec<&'static str>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::Eof {
            self.at += 1;
        }
        self.expected.clear();
        t
    }

    fn check(&mut self, tok: &Tok, what: &'static str) -> bool {
        if self.peek() == tok {
            true
        } else {
            if !self.expected.contains(&what) {
                self.expected.push(what);
            }
            false
        }
    }

    fn eat(&mut self, tok: Tok, what: &'static str) -> bool {
        if self.check(&tok, what) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &'static str) -> Result<(), SyntaxError> {
        if self.eat(tok, what) {
            Ok(())
        } else {
            Err(self.error())
        }
    }

    fn error(&self) -> SyntaxError {
        let mut expected: Vec<String> = self.expected.iter().map(|s| s.to_string()).collect();
        expected.sort();
        expected.dedup();
        SyntaxError {
            pos: self.pos(),
            message: format!("unexpected {}", self.peek()),
            expected,
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        if self.eat(Tok::If, "`if`") {
            let cond = self.expr()?;
            self.expect(Tok::Then, "`then`")?;
            let then = self.expr()?;
            self.expect(Tok::Else, "`else`")?;
            let els = self.expr()?;
            return Ok(Expr::if_(cond, then, els));
        }
        if self.eat(Tok::Let, "`let`") {
            let name = match self.peek() {
                Tok::Ident(name) => name.clone(),
                _ => {
                    self.expected.push("identifier");
                    return Err(self.error());
                }
            };
            self.advance();
            self.expect(Tok::Eq, "`=`")?;
            let bound = self.expr()?;
            self.expect(Tok::In, "`in`")?;
            let body = self.expr()?;
            return Ok(Expr::let_(&name, bound, body));
        }
        self.or_expr()
    }

    fn left_assoc(
        &mut self,
        ops: &[(Tok, BinOp, &'static str)],
        next: fn(&mut Self) -> Result<Expr, SyntaxError>,
    ) -> Result<Expr, SyntaxError> {
        let mut lhs = next(self)?;
        'outer: loop {
            for (tok, op, what) in ops {
                if self.eat(tok.clone(), what) {
                    let rhs = next(self)?;
                    lhs = Expr::binary(*op, lhs, rhs);
                    continue 'outer;
                }
            }
            return Ok(lhs);
        }
    }

    fn or_expr(&mut self) -> Result<Expr, SyntaxError> {
        self.left_assoc(&[(Tok::Or, BinOp::Or, "`or`")], Self::xor_expr)
    }

    fn xor_expr(&mut self) -> Result<Expr, SyntaxError> {
        self.left_assoc(&[(Tok::Xor, BinOp::Xor, "`xor`")], Self::and_expr)
    }

    fn and_expr(&mut self) -> Result<Expr, SyntaxError> {
        self.left_assoc(&[(Tok::And, BinOp::And, "`and`")], Self::cmp_expr)
    }

    // Comparisons do not chain: `a < b < c` is a syntax error.
    fn cmp_expr(&mut self) -> Result<Expr, SyntaxError> {
        const OPS: [(Tok, BinOp, &str); 6] = [
            (Tok::Lt, BinOp::Lt, "`<`"),
            (Tok::Le, BinOp::Le, "`<=`"),
            (Tok::Eq, BinOp::Eq, "`=`"),
            (Tok::Ne, BinOp::Ne, "`<>`"),
            (Tok::Ge, BinOp::Ge, "`>=`"),
            (Tok::Gt, BinOp::Gt, "`>`"),
        ];
        let lhs = self.add_expr()?;
        for (tok, op, what) in OPS {
            if self.eat(tok, what) {
                let rhs = self.add_expr()?;
                return Ok(Expr::binary(op, lhs, rhs));
            }
        }
        Ok(lhs)
    }

    fn add_expr(&mut self) -> Result<Expr, SyntaxError> {
        self.left_assoc(
            &[(Tok::Plus, BinOp::Add, "`+`"), (Tok::Minus, BinOp::Sub, "`-`")],
            Self::mul_expr,
        )
    }

    fn mul_expr(&mut self) -> Result<Expr, SyntaxError> {
        self.left_assoc(
            &[
                (Tok::Star, BinOp::Mul, "`*`"),
                (Tok::Div, BinOp::Div, "`div`"),
                (Tok::Mod, BinOp::Mod, "`mod`"),
            ],
            Self::unary,
        )
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if self.eat(Tok::Minus, "`-`") {
            return Ok(Expr::unary(UnOp::Neg, self.unary()?));
        }
        if self.eat(Tok::Not, "`not`") {
            return Ok(Expr::unary(UnOp::Not, self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        let e = match self.peek().clone() {
            Tok::Int(v) => Expr::Int(v),
            Tok::Float(v) => Expr::Float(v),
            Tok::True => Expr::Bool(true),
            Tok::False => Expr::Bool(false),
            Tok::Brick(b) => Expr::Brick(b),
            Tok::Ident(name) => Expr::Var(name),
            Tok::Func(f) => {
                self.advance();
                self.expect(Tok::LParen, "`(`")?;
                let arg = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(Expr::call(f, arg));
            }
            Tok::LParen => {
                self.advance();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(e);
            }
            _ => {
                self.expected.extend(["literal", "identifier", "`(`", "function call", "`if`", "`let`"]);
                return Err(self.error());
            }
        };
        self.advance();
        Ok(e)
    }
}

/// Parses one complete expression.
pub fn parse(src: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        at: 0,
        expected: Vec::new(),
    };
    let e = p.expr()?;
    if p.check(&Tok::Eof, "end of input") {
        Ok(e)
    } else {
        Err(p.error())
    }
}
