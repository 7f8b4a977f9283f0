b = eval(input())
y = eval(input())
s = b
b = y
y = s
print(b)
print(y)
print(b == y)
