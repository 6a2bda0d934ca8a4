#include "rtlbench/problems/problem.h"

#include <stdexcept>

#include "json.hpp"

namespace rtlbench::problems {

namespace {

constexpr uint64_t MaskOf(int width) {
  return width >= 64 ? ~uint64_t{0} : ((uint64_t{1} << width) - 1);
}

uint64_t Get(const SignalMap& m, const std::string& name) {
  auto it = m.find(name);
  if (it == m.end()) throw std::invalid_argument("missing signal " + name);
  return it->second;
}

struct Builder {
  Problem p;

  Builder(int id, Difficulty d, std::string title, std::string module_name) {
    p.id = id;
    p.difficulty = d;
    p.title = std::move(title);
    p.module_name = std::move(module_name);
  }

  Builder& In(std::string name, int width = 1, bool is_signed = false) {
    p.ports.push_back({std::move(name), Port::kInput, width, is_signed, false});
    return *this;
  }
  Builder& Out(std::string name, int width = 1, bool is_signed = false,
               bool is_reg = false) {
    p.ports.push_back(
        {std::move(name), Port::kOutput, width, is_signed, is_reg});
    return *this;
  }
  Builder& Header(std::string h) {
    p.module_header = std::move(h);
    return *this;
  }
  // L = comment + header (+ internal decls); M = L + extra; H = M + extra.
  Builder& Prompts(std::string low, std::string medium_extra,
                   std::string high_extra) {
    p.prompt_low = std::move(low);
    p.prompt_medium = p.prompt_low + medium_extra;
    p.prompt_high = p.prompt_medium + high_extra;
    return *this;
  }
  Builder& Comb(std::function<SignalMap(const SignalMap&)> eval) {
    p.model = CombinationalModel{std::move(eval)};
    return *this;
  }
  Builder& Seq(State reset_state,
               std::function<State(const State&, const SignalMap&)> step,
               std::function<SignalMap(const State&, const SignalMap&)> out) {
    p.model = SequentialModel{std::move(reset_state), std::move(step),
                              std::move(out)};
    return *this;
  }
  Builder& Golden(std::string body, std::string note = "primary") {
    p.goldens.push_back({std::move(body), std::move(note)});
    return *this;
  }
  Builder& Mutant(std::string body, std::string note) {
    p.mutant_body = std::move(body);
    p.mutant_note = std::move(note);
    return *this;
  }
};

std::vector<Problem> BuildAll() {
  std::vector<Problem> all;

  {  // 1: wire
    Builder b(1, Difficulty::kBasic, "A simple wire", "simple_wire");
    b.In("in").Out("out");
    b.Header("module simple_wire(input in, output out);\n");
    b.Prompts(
        "// This is a simple wire that connects its input to its output.\n" +
            b.p.module_header,
        "// The output out always carries the value of the input in.\n",
        "// out = in\n");
    b.Comb([](const SignalMap& in) {
      return SignalMap{{"out", Get(in, "in")}};
    });
    b.Golden("assign out = in;\nendmodule\n");
    b.Mutant("assign out = ~in;\nendmodule\n", "output inverted");
    all.push_back(std::move(b.p));
  }

  {  // 2: and gate
    Builder b(2, Difficulty::kBasic, "A 2-input and gate", "and_gate");
    b.In("a").In("b").Out("out");
    b.Header("module and_gate(input a, input b, output out);\n");
    b.Prompts("// This is a 2-input and gate.\n" + b.p.module_header,
              "// The output out is high only when both a and b are high.\n",
              "// out = a & b\n");
    b.Comb([](const SignalMap& in) {
      return SignalMap{{"out", Get(in, "a") & Get(in, "b")}};
    });
    b.Golden("assign out = a & b;\nendmodule\n");
    b.Mutant("assign out = a | b;\nendmodule\n", "OR instead of AND");
    all.push_back(std::move(b.p));
  }

  {  // 3: priority encoder
    Builder b(3, Difficulty::kBasic, "A 3-bit priority encoder",
              "priority_encoder");
    b.In("in", 3).Out("pos", 2, false, true);
    b.Header("module priority_encoder(input[2:0] in,output reg[1:0] pos);\n");
    b.Prompts(
        "// This is a 3-bit priority encoder. It outputs the position of the "
        "first high bit.\n" +
            b.p.module_header,
        "// If none of the input bits are high (i.e., input is zero), output "
        "zero.\n"
        "// Otherwise pos is the position of the lowest input bit that is "
        "high.\n",
        "// if in == 0: pos = 0\n"
        "// else if in[0]: pos = 0\n"
        "// else if in[1]: pos = 1\n"
        "// else: pos = 2\n");
    b.Comb([](const SignalMap& in) {
      uint64_t v = Get(in, "in");
      uint64_t pos = 0;
      if (v == 0)
        pos = 0;
      else if (v & 1)
        pos = 0;
      else if (v & 2)
        pos = 1;
      else
        pos = 2;
      return SignalMap{{"pos", pos}};
    });
    b.Golden(
        "always @(in) \n"
        "if (in == 0)  pos <= 2'h0;\n"
        "else if (in[0])  pos <= 2'h0;\n"
        "else if (in[1]) pos <= 2'h1;\n"
        "else pos <= 2'h2;\n"
        "endmodule\n");
    b.Mutant(
        "always @(in) begin \n"
        "case(in)\n"
        " 3'b000: pos=2'b00;\n"
        " 3'b001: pos=2'b01;\n"
        " 3'b010: pos=2'b10;\n"
        " 3'b011: pos=2'b11;\n"
        "default: pos=2'b00;\n"
        "endcase\n"
        "end\n"
        "endmodule\n",
        "positions offset by 1");
    all.push_back(std::move(b.p));
  }

  {  // 4: mux
    Builder b(4, Difficulty::kBasic, "A 2-input multiplexer", "mux2to1");
    b.In("a").In("b").In("sel").Out("out");
    b.Header("module mux2to1(input a, input b, input sel, output out);\n");
    b.Prompts("// This is a 2-input multiplexer with a select line.\n" +
                  b.p.module_header,
              "// When sel is low the output follows a; when sel is high the "
              "output follows b.\n",
              "// out = sel ? b : a\n");
    b.Comb([](const SignalMap& in) {
      return SignalMap{
          {"out", Get(in, "sel") ? Get(in, "b") : Get(in, "a")}};
    });
    b.Golden("assign out = sel ? b : a;\nendmodule\n");
    b.Mutant("assign out = sel ? a : b;\nendmodule\n", "select sense swapped");
    all.push_back(std::move(b.p));
  }

  {  // 5: half adder
    Builder b(5, Difficulty::kIntermediate, "A half adder", "half_adder");
    b.In("a").In("b").Out("sum").Out("carry");
    b.Header("module half_adder(input a, input b, output sum, output carry);\n");
    b.Prompts("// This is a half adder.\n" + b.p.module_header,
              "// sum is the exclusive OR of a and b; carry is high when both "
              "a and b are high.\n",
              "// sum = a ^ b\n// carry = a & b\n");
    b.Comb([](const SignalMap& in) {
      uint64_t a = Get(in, "a"), v = Get(in, "b");
      return SignalMap{{"sum", a ^ v}, {"carry", a & v}};
    });
    b.Golden("assign sum = a ^ b;\nassign carry = a & b;\nendmodule\n");
    b.Mutant("assign sum = a ^ b;\nassign carry = a | b;\nendmodule\n",
             "carry computed with OR");
    all.push_back(std::move(b.p));
  }

  {  // 6: counter 1..12
    Builder b(6, Difficulty::kIntermediate, "A 1-to-12 counter", "counter");
    b.In("clk").In("reset").Out("q", 4, false, true);
    b.Header("module counter(input clk,input reset,output reg[3:0] q);\n");
    b.Prompts(
        "// This is a counter that counts from 1 to 12\n" + b.p.module_header,
        "// q advances by one on every rising edge of clk.\n"
        "// When reset is high, q becomes 1 at the next clock edge.\n"
        "// After reaching 12 the counter wraps back to 1.\n",
        "// at posedge clk:\n"
        "//   if reset: q = 1\n"
        "//   else if q == 12: q = 1\n"
        "//   else: q = q + 1\n");
    b.Seq(
        {1},
        [](const State& s, const SignalMap&) -> State {
          return {s[0] == 12 ? uint64_t{1} : s[0] + 1};
        },
        [](const State& s, const SignalMap&) {
          return SignalMap{{"q", s[0]}};
        });
    b.Golden(
        "always @(posedge clk) begin\n"
        "if(reset) q <= 4'd1;\n"
        "else begin \n"
        "if(q == 4'd12) q <= 4'd1;\n"
        "else q <= q + 4'd1;\n"
        "end\n"
        "end\n"
        "endmodule\n",
        "synchronous reset");
    b.Golden(
        "always @(posedge clk or posedge reset) begin\n"
        "if(reset) q <= 4'd1;\n"
        "else begin \n"
        "if(q == 4'd12) q <= 4'd1;\n"
        "else q <= q + 4'd1;\n"
        "end\n"
        "end\n"
        "endmodule\n",
        "asynchronous reset");
    b.Mutant(
        "always @ (posedge clk) begin\n"
        "if(reset) q <= 4'd1;\n"
        "else begin\n"
        "q <= q + 4'd1;\n"
        "end end endmodule\n",
        "counter does not stop at 12");
    all.push_back(std::move(b.p));
  }

  {  // 7: LFSR, taps 3 and 5
    Builder b(7, Difficulty::kIntermediate, "LFSR with taps at 3 and 5",
              "lfsr");
    b.In("clk").In("reset").Out("q", 6, false, true);
    b.Header("module lfsr(input clk, input reset, output reg [5:0] q);\n");
    b.Prompts(
        "// This is a 6-bit linear feedback shift register with taps at bits "
        "3 and 5.\n" +
            b.p.module_header,
        "// When reset is high, q becomes 6'b000001 at the next clock edge.\n"
        "// On each clock edge the register shifts one position toward the "
        "least significant bit.\n"
        "// The feedback bit, the XOR of bits 3 and 5, enters at the most "
        "significant bit.\n",
        "// feedback = q[3] ^ q[5]\n"
        "// at posedge clk:\n"
        "//   if reset: q = 6'b000001\n"
        "//   else: q = {feedback, q[5:1]}\n");
    b.Seq(
        {1},
        [](const State& s, const SignalMap&) -> State {
          uint64_t q = s[0];
          uint64_t fb = ((q >> 3) ^ (q >> 5)) & 1;
          return {((q >> 1) | (fb << 5)) & 0x3f};
        },
        [](const State& s, const SignalMap&) {
          return SignalMap{{"q", s[0]}};
        });
    b.Golden(
        "wire feedback = q[3] ^ q[5];\n"
        "always @(posedge clk) begin\n"
        "  if (reset) q <= 6'b000001;\n"
        "  else q <= {feedback, q[5:1]};\n"
        "end\n"
        "endmodule\n",
        "synchronous reset");
    b.Golden(
        "wire feedback = q[3] ^ q[5];\n"
        "always @(posedge clk or posedge reset) begin\n"
        "  if (reset) q <= 6'b000001;\n"
        "  else q <= {feedback, q[5:1]};\n"
        "end\n"
        "endmodule\n",
        "asynchronous reset");
    b.Mutant(
        "wire feedback = q[2] ^ q[4];\n"
        "always @(posedge clk) begin\n"
        "  if (reset) q <= 6'b000001;\n"
        "  else q <= {feedback, q[5:1]};\n"
        "end\n"
        "endmodule\n",
        "feedback taps moved to 2 and 4");
    all.push_back(std::move(b.p));
  }

  {  // 8: two-state FSM
    Builder b(8, Difficulty::kIntermediate, "FSM with two states",
              "fsm_two_state");
    b.In("clk").In("reset").In("in").Out("out");
    b.Header(
        "module fsm_two_state(input clk, input reset, input in, output out);\n"
        "reg state;\n"
        "parameter OFF = 0, ON = 1;\n");
    b.Prompts(
        "// This is a finite state machine with two states.\n" +
            b.p.module_header,
        "// The state toggles between OFF and ON when in is high at a clock "
        "edge, and holds otherwise.\n"
        "// When reset is high the state becomes OFF at the next clock edge.\n"
        "// The output out is high while the state is ON.\n",
        "// at posedge clk:\n"
        "//   if reset: state = OFF\n"
        "//   else if in: state = (state == OFF) ? ON : OFF\n"
        "// out = (state == ON)\n");
    b.Seq(
        {0},
        [](const State& s, const SignalMap& in) -> State {
          return {Get(in, "in") ? (s[0] ^ 1) : s[0]};
        },
        [](const State& s, const SignalMap&) {
          return SignalMap{{"out", s[0]}};
        });
    b.Golden(
        "always @(posedge clk) begin\n"
        "  if (reset) state <= OFF;\n"
        "  else if (in) state <= (state == OFF) ? ON : OFF;\n"
        "end\n"
        "assign out = (state == ON);\n"
        "endmodule\n",
        "synchronous reset");
    b.Golden(
        "always @(posedge clk or posedge reset) begin\n"
        "  if (reset) state <= OFF;\n"
        "  else if (in) state <= (state == OFF) ? ON : OFF;\n"
        "end\n"
        "assign out = (state == ON);\n"
        "endmodule\n",
        "asynchronous reset");
    b.Mutant(
        "always @(posedge clk) begin\n"
        "  if (reset) state <= OFF;\n"
        "  else if (in) state <= (state == OFF) ? ON : OFF;\n"
        "end\n"
        "assign out = (state == OFF);\n"
        "endmodule\n",
        "output sense inverted");
    all.push_back(std::move(b.p));
  }

  {  // 9: shift left and rotate
    Builder b(9, Difficulty::kIntermediate, "Shift left and rotate",
              "shift_rotate");
    b.In("in", 8).In("amount", 2).In("mode").Out("out", 8);
    b.Header(
        "module shift_rotate(input [7:0] in, input [1:0] amount, input mode, "
        "output [7:0] out);\n");
    b.Prompts(
        "// This module shifts or rotates its 8-bit input to the left.\n" +
            b.p.module_header,
        "// When mode is low, out is in shifted left by amount with zeros "
        "filling the vacated bits.\n"
        "// When mode is high, out is in rotated left by amount.\n",
        "// if mode == 0: out = in << amount\n"
        "// else: out = (in << amount) | (in >> (8 - amount))\n");
    b.Comb([](const SignalMap& in) {
      uint64_t v = Get(in, "in"), amt = Get(in, "amount");
      uint64_t shifted = (v << amt) & 0xff;
      uint64_t rotated = ((v << amt) | (v >> (8 - amt))) & 0xff;
      return SignalMap{{"out", Get(in, "mode") ? rotated : shifted}};
    });
    b.Golden(
        "wire [7:0] shifted = in << amount;\n"
        "wire [7:0] rotated = (in << amount) | (in >> (8 - amount));\n"
        "assign out = mode ? rotated : shifted;\n"
        "endmodule\n");
    b.Mutant("assign out = in << amount;\nendmodule\n",
             "rotate mode ignored; always shifts");
    all.push_back(std::move(b.p));
  }

  {  // 10: RAM 8x64
    Builder b(10, Difficulty::kIntermediate, "Random Access Memory", "ram");
    b.In("clk").In("we").In("addr", 6).In("din", 8).Out("dout", 8);
    b.Header(
        "module ram(input clk, input we, input [5:0] addr, input [7:0] din, "
        "output [7:0] dout);\n"
        "reg [7:0] mem [0:63];\n");
    b.Prompts(
        "// This is a random access memory. The data width is 8 and the "
        "address width is 6.\n" +
            b.p.module_header,
        "// On a rising clock edge, when we is high, din is stored at "
        "location addr.\n"
        "// dout continuously presents the value stored at location addr.\n",
        "// at posedge clk:\n"
        "//   if we: mem[addr] = din\n"
        "// dout = mem[addr]\n");
    State zeros(64, 0);
    b.Seq(
        zeros,
        [](const State& s, const SignalMap& in) -> State {
          State next = s;
          if (Get(in, "we")) next[Get(in, "addr")] = Get(in, "din");
          return next;
        },
        [](const State& s, const SignalMap& in) {
          return SignalMap{{"dout", s[Get(in, "addr")]}};
        });
    b.Golden(
        "always @(posedge clk) begin\n"
        "  if (we) mem[addr] <= din;\n"
        "end\n"
        "assign dout = mem[addr];\n"
        "endmodule\n");
    b.Mutant(
        "always @(posedge clk) begin\n"
        "  if (we) mem[addr + 6'd1] <= din;\n"
        "end\n"
        "assign dout = mem[addr];\n"
        "endmodule\n",
        "writes land at the neighboring address");
    all.push_back(std::move(b.p));
  }

  {  // 11: permutation (bit reversal)
    Builder b(11, Difficulty::kIntermediate, "Permutation", "permutation");
    b.In("in", 8).Out("out", 8);
    b.Header("module permutation(input [7:0] in, output [7:0] out);\n");
    b.Prompts(
        "// This module applies a fixed permutation to its 8-bit input.\n" +
            b.p.module_header,
        "// The permutation reverses the bit order: out[7] = in[0], out[6] = "
        "in[1], ..., out[0] = in[7].\n",
        "// out[i] = in[7 - i] for every bit position i\n");
    b.Comb([](const SignalMap& in) {
      uint64_t v = Get(in, "in"), r = 0;
      for (int i = 0; i < 8; ++i) {
        r |= ((v >> i) & 1) << (7 - i);
      }
      return SignalMap{{"out", r}};
    });
    b.Golden(
        "assign out = {in[0], in[1], in[2], in[3], in[4], in[5], in[6], "
        "in[7]};\nendmodule\n");
    b.Mutant("assign out = in;\nendmodule\n", "permutation left as identity");
    all.push_back(std::move(b.p));
  }

  {  // 12: truth table
    Builder b(12, Difficulty::kIntermediate, "Truth table", "truth_table");
    b.In("x3").In("x2").In("x1").Out("f");
    b.Header("module truth_table(input x3, input x2, input x1, output f);\n");
    b.Prompts(
        "// This module implements the three-input boolean function f "
        "defined by the truth table below.\n"
        "// x3 x2 x1 | f\n"
        "//  0  0  0 | 0\n"
        "//  0  0  1 | 0\n"
        "//  0  1  0 | 1\n"
        "//  0  1  1 | 1\n"
        "//  1  0  0 | 0\n"
        "//  1  0  1 | 1\n"
        "//  1  1  0 | 0\n"
        "//  1  1  1 | 1\n" +
            b.p.module_header,
        "// f is high in exactly the rows marked 1 above.\n",
        "// f = (~x3 & x2) | (x3 & x1)\n");
    b.Comb([](const SignalMap& in) {
      uint64_t x3 = Get(in, "x3"), x2 = Get(in, "x2"), x1 = Get(in, "x1");
      return SignalMap{{"f", ((~x3 & x2) | (x3 & x1)) & 1}};
    });
    b.Golden("assign f = (~x3 & x2) | (x3 & x1);\nendmodule\n");
    b.Mutant("assign f = (x3 & x2) | (~x3 & x1);\nendmodule\n",
             "minterm polarity swapped");
    all.push_back(std::move(b.p));
  }

  {  // 13: signed adder with overflow
    Builder b(13, Difficulty::kAdvanced, "Signed 8-bit adder with overflow",
              "signed_adder");
    b.In("a", 8, true).In("b", 8, true).Out("sum", 8, true).Out("overflow");
    b.Header(
        "module signed_adder(input signed [7:0] a, input signed [7:0] b, "
        "output signed [7:0] sum, output overflow);\n");
    b.Prompts(
        "// This is a signed 8-bit adder that reports overflow.\n" +
            b.p.module_header,
        "// sum is the signed sum of a and b truncated to 8 bits.\n"
        "// overflow is high when the true signed sum does not fit in 8 "
        "bits.\n",
        "// sum = a + b\n"
        "// overflow = (a[7] == b[7]) && (sum[7] != a[7])\n");
    b.Comb([](const SignalMap& in) {
      uint64_t a = Get(in, "a"), v = Get(in, "b");
      uint64_t sum = (a + v) & 0xff;
      uint64_t sa = (a >> 7) & 1, sb = (v >> 7) & 1, ss = (sum >> 7) & 1;
      return SignalMap{{"sum", sum},
                       {"overflow", (sa == sb && ss != sa) ? 1u : 0u}};
    });
    b.Golden(
        "assign sum = a + b;\n"
        "assign overflow = (a[7] == b[7]) && (sum[7] != a[7]);\n"
        "endmodule\n");
    b.Mutant(
        "wire [8:0] wide = {1'b0, a} + {1'b0, b};\n"
        "assign sum = a + b;\n"
        "assign overflow = wide[8];\n"
        "endmodule\n",
        "unsigned carry-out used as overflow");
    all.push_back(std::move(b.p));
  }

  {  // 14: counter with enable
    Builder b(14, Difficulty::kAdvanced, "Counter with enable signal",
              "counter_enable");
    b.In("clk").In("reset").In("enable").Out("q", 4, false, true);
    b.Header(
        "module counter_enable(input clk, input reset, input enable, output "
        "reg [3:0] q);\n");
    b.Prompts(
        "// This is a counter with an enable signal.\n" + b.p.module_header,
        "// When reset is high, q becomes 0 at the next clock edge.\n"
        "// When enable is high, q increments on each rising edge of clk; "
        "otherwise q holds.\n",
        "// at posedge clk:\n"
        "//   if reset: q = 0\n"
        "//   else if enable: q = q + 1\n");
    b.Seq(
        {0},
        [](const State& s, const SignalMap& in) -> State {
          return {Get(in, "enable") ? ((s[0] + 1) & 0xf) : s[0]};
        },
        [](const State& s, const SignalMap&) {
          return SignalMap{{"q", s[0]}};
        });
    b.Golden(
        "always @(posedge clk) begin\n"
        "  if (reset) q <= 4'd0;\n"
        "  else if (enable) q <= q + 4'd1;\n"
        "end\n"
        "endmodule\n",
        "synchronous reset");
    b.Golden(
        "always @(posedge clk or posedge reset) begin\n"
        "  if (reset) q <= 4'd0;\n"
        "  else if (enable) q <= q + 4'd1;\n"
        "end\n"
        "endmodule\n",
        "asynchronous reset");
    b.Mutant(
        "always @(posedge clk) begin\n"
        "  if (reset) q <= 4'd0;\n"
        "  else q <= q + 4'd1;\n"
        "end\n"
        "endmodule\n",
        "enable ignored");
    all.push_back(std::move(b.p));
  }

  {  // 15: FSM recognizing 101
    Builder b(15, Difficulty::kAdvanced, "FSM to recognize '101'", "adv_fsm");
    b.In("clk").In("reset").In("x").Out("z");
    b.Header(
        "module adv_fsm(input clk, input reset, input x, output z);\n"
        "reg [1:0] present_state, next_state;\n"
        "parameter IDLE=0, S1=1, S10=2, S101=3;\n");
    b.Prompts(
        "// This is a finite state machine that recognizes the sequence 101 "
        "on the input signal x.\n" +
            b.p.module_header,
        "// output signal z is asserted to 1 when present_state is\n"
        "// S101\n"
        "// present_state is reset to IDLE when reset is high,\n"
        "// otherwise it is assigned next state\n",
        "// if present_state is IDLE, next_state is assigned S1 if\n"
        "// x is 1, otherwise next_state stays at IDLE\n"
        "// if present_state is S1, next_state is assigned S10 if\n"
        "// x is 0, otherwise next_state stays at IDLE\n"
        "// if present_state is S10, next_state is assigned S101 if\n"
        "// x is 1, otherwise next_state stays at IDLE\n"
        "// if present_state is S101, next_state is assigned IDLE\n");
    constexpr uint64_t kIdle = 0, kS1 = 1, kS10 = 2, kS101 = 3;
    b.Seq(
        {kIdle},
        [](const State& s, const SignalMap& in) -> State {
          uint64_t x = Get(in, "x");
          switch (s[0]) {
            case kIdle: return {x ? kS1 : kIdle};
            case kS1: return {x ? kIdle : kS10};
            case kS10: return {x ? kS101 : kIdle};
            default: return {kIdle};
          }
        },
        [](const State& s, const SignalMap&) {
          return SignalMap{{"z", s[0] == kS101 ? uint64_t{1} : uint64_t{0}}};
        });
    b.Golden(
        "always @(posedge clk) begin\n"
        "  if (reset) present_state <= IDLE;\n"
        "  else present_state <= next_state;\n"
        "end\n"
        "always @(*) begin\n"
        "  case (present_state)\n"
        "    IDLE: next_state = x ? S1 : IDLE;\n"
        "    S1: next_state = x ? IDLE : S10;\n"
        "    S10: next_state = x ? S101 : IDLE;\n"
        "    default: next_state = IDLE;\n"
        "  endcase\n"
        "end\n"
        "assign z = (present_state == S101);\n"
        "endmodule\n",
        "synchronous reset");
    b.Golden(
        "always @(posedge clk or posedge reset) begin\n"
        "  if (reset) present_state <= IDLE;\n"
        "  else present_state <= next_state;\n"
        "end\n"
        "always @(*) begin\n"
        "  case (present_state)\n"
        "    IDLE: next_state = x ? S1 : IDLE;\n"
        "    S1: next_state = x ? IDLE : S10;\n"
        "    S10: next_state = x ? S101 : IDLE;\n"
        "    default: next_state = IDLE;\n"
        "  endcase\n"
        "end\n"
        "assign z = (present_state == S101);\n"
        "endmodule\n",
        "asynchronous reset");
    b.Mutant(
        "always @(posedge clk) begin\n"
        "  if (reset) present_state <= IDLE;\n"
        "  else present_state <= next_state;\n"
        "end\n"
        "always @(*) begin\n"
        "  case (present_state)\n"
        "    IDLE: next_state = x ? S1 : IDLE;\n"
        "    S1: next_state = x ? IDLE : S10;\n"
        "    S10: next_state = x ? S101 : IDLE;\n"
        "    default: next_state = IDLE;\n"
        "  endcase\n"
        "end\n"
        "assign z = (present_state == S10);\n"
        "endmodule\n",
        "output asserted one state early");
    all.push_back(std::move(b.p));
  }

  {  // 16: 64-bit arithmetic shift register
    Builder b(16, Difficulty::kAdvanced, "64-bit arithmetic shift register",
              "shift_register");
    b.In("clk").In("reset").In("load").In("ena").In("dir").In("data", 64);
    b.Out("q", 64, false, true);
    b.Header(
        "module shift_register(input clk, input reset, input load, input ena, "
        "input dir, input [63:0] data, output reg [63:0] q);\n");
    b.Prompts(
        "// This is a 64-bit arithmetic shift register.\n" + b.p.module_header,
        "// When reset is high, q is cleared to zero at the next clock edge.\n"
        "// When load is high, q is loaded with data.\n"
        "// Otherwise, when ena is high, q shifts by one bit position.\n"
        "// dir selects the direction: low shifts left, high shifts right.\n"
        "// The right shift is arithmetic and preserves the sign bit.\n",
        "// at posedge clk:\n"
        "//   if reset: q = 0\n"
        "//   else if load: q = data\n"
        "//   else if ena and dir == 0: q = {q[62:0], 1'b0}\n"
        "//   else if ena and dir == 1: q = {q[63], q[63:1]}\n");
    b.Seq(
        {0},
        [](const State& s, const SignalMap& in) -> State {
          uint64_t q = s[0];
          if (Get(in, "load")) return {Get(in, "data")};
          if (!Get(in, "ena")) return {q};
          if (Get(in, "dir")) return {(q >> 1) | (q & 0x8000000000000000ULL)};
          return {q << 1};
        },
        [](const State& s, const SignalMap&) {
          return SignalMap{{"q", s[0]}};
        });
    b.Golden(
        "always @(posedge clk) begin\n"
        "  if (reset) q <= 64'd0;\n"
        "  else if (load) q <= data;\n"
        "  else if (ena) begin\n"
        "    if (dir) q <= {q[63], q[63:1]};\n"
        "    else q <= {q[62:0], 1'b0};\n"
        "  end\n"
        "end\n"
        "endmodule\n",
        "synchronous reset");
    b.Golden(
        "always @(posedge clk or posedge reset) begin\n"
        "  if (reset) q <= 64'd0;\n"
        "  else if (load) q <= data;\n"
        "  else if (ena) begin\n"
        "    if (dir) q <= {q[63], q[63:1]};\n"
        "    else q <= {q[62:0], 1'b0};\n"
        "  end\n"
        "end\n"
        "endmodule\n",
        "asynchronous reset");
    b.Mutant(
        "always @(posedge clk) begin\n"
        "  if (reset) q <= 64'd0;\n"
        "  else if (load) q <= data;\n"
        "  else if (ena) begin\n"
        "    if (dir) q <= {1'b0, q[63:1]};\n"
        "    else q <= {q[62:0], 1'b0};\n"
        "  end\n"
        "end\n"
        "endmodule\n",
        "right shift drops the sign bit");
    all.push_back(std::move(b.p));
  }

  {  // 17: ABRO FSM
    Builder b(17, Difficulty::kAdvanced, "ABRO FSM", "abro");
    b.In("clk").In("reset").In("a").In("b").Out("z");
    b.Header(
        "module abro(input clk,input reset,input a,input b,output z);\n"
        "parameter IDLE = 0, SA = 1, SB = 2, SAB = 3;\n"
        "reg [1:0] cur_state,next_state;\n");
    b.Prompts(
        "// This is an FSM\n"
        "// It outputs 1 when 1 is received for signals a and b irrespective "
        "of their order, either simultaneously or non-simultaneously.\n" +
            b.p.module_header,
        "//Update state or reset on every clock edge\n"
        "//Output z depends only on the state SAB\n"
        "//The output z is high when cur_state is SAB\n"
        "//cur_state is reset to IDLE when reset is high. Otherwise, it takes "
        "value of next_state.\n",
        "//Next state generation logic:\n"
        "//If cur_state is IDLE and a and b are both high, state changes to "
        "SAB\n"
        "//If cur_state is IDLE,and a is high,state changes to SA\n"
        "//If cur_state is IDLE,and b is high,state changes to SB\n"
        "//If cur_state is SA,and b is high,state changes to SAB\n"
        "//If cur_state is SB,and a is high,state changes to SAB\n"
        "//If cur_state is SAB, state changes to IDLE\n");
    constexpr uint64_t kIdle = 0, kSa = 1, kSb = 2, kSab = 3;
    b.Seq(
        {kIdle},
        [](const State& s, const SignalMap& in) -> State {
          uint64_t a = Get(in, "a"), v = Get(in, "b");
          switch (s[0]) {
            case kIdle:
              if (a && v) return {kSab};
              if (a) return {kSa};
              if (v) return {kSb};
              return {kIdle};
            case kSa: return {v ? kSab : kSa};
            case kSb: return {a ? kSab : kSb};
            default: return {kIdle};
          }
        },
        [](const State& s, const SignalMap& in) {
          uint64_t z = (s[0] == kSab ||
                        (s[0] == kIdle && Get(in, "a") && Get(in, "b")))
                           ? 1
                           : 0;
          return SignalMap{{"z", z}};
        });
    const std::string kAbroBody =
        "// Implements an FSM in Verilog\n"
        "always @(posedge clk or posedge reset) begin\n"
        "if(reset) cur_state <= IDLE;\n"
        "else cur_state <= next_state; end\n"
        "always @(cur_state or a or b) begin\n"
        "case(cur_state)\n"
        "IDLE: begin\n"
        "if(a && b) next_state = SAB;\n"
        "else if (a) next_state = SA;\n"
        "else if (b) next_state = SB; end\n"
        "SA: begin\n"
        "if(b) next_state = SAB;\n"
        "else next_state = SA; end\n"
        "SB: begin\n"
        "if(a) next_state = SAB;\n"
        "else next_state = SB; end\n"
        "SAB: begin\n"
        "next_state = IDLE; end\n"
        "default:\n"
        "next_state = IDLE; endcase end\n"
        "// Output logic:\n"
        "// Output z is high when cur_state is SAB\n"
        "// Output z is high when cur_state is IDLE and a and b are both "
        "high\n"
        "// Output z is low otherwise.\n";
    std::string sync_body = kAbroBody;
    auto at = sync_body.find("always @(posedge clk or posedge reset)");
    sync_body.replace(at, std::string("always @(posedge clk or posedge reset)").size(),
                      "always @(posedge clk)");
    b.Golden(sync_body +
                 "assign z = (cur_state == SAB || (cur_state == IDLE && a && "
                 "b));\nendmodule\n",
             "synchronous reset");
    b.Golden(kAbroBody +
                 "assign z = (cur_state == SAB || (cur_state == IDLE && a && "
                 "b));\nendmodule\n",
             "asynchronous reset");
    b.Mutant(kAbroBody +
                 "assign z = (cur_state == IDLE && a && b) || (cur_state\n"
                 " == IDLE && a);\nendmodule\n",
             "z never asserted in SAB");
    all.push_back(std::move(b.p));
  }

  return all;
}

void ValidateInputs(const Problem& p, const SignalMap& inputs) {
  for (const auto& [name, value] : inputs) {
    const Port& port = p.PortByName(name);
    if (port.dir != Port::kInput) {
      throw std::invalid_argument(name + " is not an input of " +
                                  p.module_name);
    }
    if (value > MaskOf(port.width)) {
      throw std::invalid_argument("value for " + name + " exceeds " +
                                  std::to_string(port.width) + " bits");
    }
  }
}

}  // namespace

const char* DifficultyName(Difficulty d) {
  switch (d) {
    case Difficulty::kBasic: return "Basic";
    case Difficulty::kIntermediate: return "Intermediate";
    case Difficulty::kAdvanced: return "Advanced";
  }
  return "?";
}

const char* PromptLevelName(PromptLevel l) {
  switch (l) {
    case PromptLevel::kLow: return "L";
    case PromptLevel::kMedium: return "M";
    case PromptLevel::kHigh: return "H";
  }
  return "?";
}

PromptLevel ParsePromptLevel(const std::string& s) {
  if (s == "L") return PromptLevel::kLow;
  if (s == "M") return PromptLevel::kMedium;
  if (s == "H") return PromptLevel::kHigh;
  throw std::invalid_argument("unknown prompt level: " + s);
}

bool Problem::HasPort(const std::string& name) const {
  for (const auto& port : ports) {
    if (port.name == name) return true;
  }
  return false;
}

const Port& Problem::PortByName(const std::string& name) const {
  for (const auto& port : ports) {
    if (port.name == name) return port;
  }
  throw std::invalid_argument("no port named " + name + " on " + module_name);
}

std::vector<Port> Problem::DataInputs() const {
  std::vector<Port> out;
  for (const auto& port : ports) {
    if (port.dir == Port::kInput && port.name != "clk" && port.name != "reset")
      out.push_back(port);
  }
  return out;
}

std::vector<Port> Problem::DataOutputs() const {
  std::vector<Port> out;
  for (const auto& port : ports) {
    if (port.dir == Port::kOutput) out.push_back(port);
  }
  return out;
}

int Problem::InputSpaceBits() const {
  int bits = 0;
  for (const auto& port : DataInputs()) bits += port.width;
  return bits;
}

const std::vector<Problem>& LoadProblemSet() {
  static const std::vector<Problem> kAll = BuildAll();
  return kAll;
}

const Problem& GetProblem(int id) {
  const auto& all = LoadProblemSet();
  if (id < 1 || id > int(all.size())) {
    throw std::invalid_argument("problem id out of range: " +
                                std::to_string(id));
  }
  return all[id - 1];
}

std::string PromptFor(const Problem& problem, PromptLevel level) {
  switch (level) {
    case PromptLevel::kLow: return problem.prompt_low;
    case PromptLevel::kMedium: return problem.prompt_medium;
    case PromptLevel::kHigh: return problem.prompt_high;
  }
  throw std::invalid_argument("bad prompt level");
}

SignalMap RefEval(const Problem& problem, const SignalMap& inputs) {
  const auto* comb = std::get_if<CombinationalModel>(&problem.model);
  if (!comb) {
    throw std::invalid_argument(problem.module_name + " is sequential");
  }
  ValidateInputs(problem, inputs);
  return comb->eval(inputs);
}

StepResult RefStep(const Problem& problem, const State& state,
                   const SignalMap& inputs, bool reset) {
  const auto* seq = std::get_if<SequentialModel>(&problem.model);
  if (!seq) {
    throw std::invalid_argument(problem.module_name + " is combinational");
  }
  ValidateInputs(problem, inputs);
  StepResult r;
  r.state = reset ? seq->reset_state : seq->step(state, inputs);
  r.outputs = seq->output(r.state, inputs);
  return r;
}

std::string ProblemSetToJson() {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& p : LoadProblemSet()) {
    nlohmann::ordered_json jp;
    jp["id"] = p.id;
    jp["difficulty"] = DifficultyName(p.difficulty);
    jp["title"] = p.title;
    jp["module"] = p.module_name;
    jp["prompts"] = {{"L", p.prompt_low},
                     {"M", p.prompt_medium},
                     {"H", p.prompt_high}};
    doc.push_back(std::move(jp));
  }
  return doc.dump(2);
}

}  // namespace rtlbench::problems
