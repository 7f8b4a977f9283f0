print((eval(input()) + eval(input())))
v1 = (9 + 0) + [10, 19][1]
d2 = {9: eval(input())}
l3 = [(v1 + v1), 6, v1, v1]
v4 = d2[9]
v5 = (-v1 if not False else (v4 if True else 20))
print(1)
d2[9] = 20 + 16
print((d2[9] + d2[9]))
