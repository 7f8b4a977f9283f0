b1 = eval(input()) or 11 == 16
print(True and True or b1)
v2 = (13 + -2)
d3 = {2: (12 + v2)}
print((d3[2] + (v2 + v2)))
d4 = {8: d3[2]}
v5 = (v2 + eval(input()))
v6 = 12
print((d3[2] if (b1) else (8 + v2)))
print((11 + [17, 8][1]))
