m = eval(input())
s = m == 8
print(s)
print(1 if s else 0)
print(m + 8)
print([m, s])
