def f1(p2):
    t3 = ((p2 + p2) if (False) else eval(input()))
    t4 = (t3 + t3)
    t5 = [(t4 if False else t4), eval(input())][1]
    return ([t4, 5][1] if (True) else t4)
f1(-0)
d6 = {0: 4}
v7 = d6[0]
l8 = [1, 11]
v9 = v7 + v7
print((v7 if True else f1(v7)))
