b = eval(input())
s = b == 15
print(s)
print(1 if s else 0)
print(b + 15)
print([b, s])
