def f1(p2, p3):
    t4 = eval(input())
    t5 = -((t4 + t4))
    return (t5 if t4 == p3 else -p3)
l6 = [(2 + 3), eval(input())]
v7 = 11
v8 = -1
print((l6[1] if l6 is l6 else (17 + v8)))
