print(not False or True or False)
print(eval(input()))
d1 = {1: (8 + 2), 3: 14, 6: 6}
d2 = {3: (19 + 20)}
v3 = d1[1]
v4 = d1[6]
d1[3] = (14 if True else 19)
b5 = v3 == (9 + v3)
print(d2[3])
